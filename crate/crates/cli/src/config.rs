//! `key = value` configuration file.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use plethy_core::{Limits, DEFAULT_MAX_TABLE_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub cache_path: PathBuf,
    pub max_table_n: usize,
    pub limits: Limits,
    pub output_format: OutputFormat,
    pub parallelism: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            cache_path: PathBuf::from("plethy.cache"),
            max_table_n: DEFAULT_MAX_TABLE_N,
            limits: Limits::default(),
            output_format: OutputFormat::Json,
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl FromStr for Config {
    type Err = String;

    /// Unknown keys are rejected; missing keys keep their defaults. Blank
    /// lines and `#` comments are ignored.
    fn from_str(text: &str) -> Result<Self, String> {
        let mut config = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let positive = || -> Result<usize, String> {
                match value.parse::<usize>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => Err(format!(
                        "line {}: {key} must be a positive integer",
                        lineno + 1
                    )),
                }
            };
            match key {
                "cache_path" => config.cache_path = PathBuf::from(value),
                "max_table_n" => config.max_table_n = positive()?,
                "thm1_n" => config.limits.thm1_n = positive()?,
                "thm1_d" => config.limits.thm1_d = positive()?,
                "littlewood_size" => config.limits.littlewood_size = positive()?,
                "thm2_n" => config.limits.thm2_n = positive()?,
                "thm2_d" => config.limits.thm2_d = positive()?,
                "oracle_n" => config.limits.oracle_n = positive()?,
                "parallelism" => config.parallelism = positive()?,
                "output_format" => {
                    config.output_format = match value {
                        "json" => OutputFormat::Json,
                        "csv" => OutputFormat::Csv,
                        _ => {
                            return Err(format!(
                                "line {}: output_format must be json or csv",
                                lineno + 1
                            ))
                        }
                    }
                }
                _ => return Err(format!("line {}: unknown key {key:?}", lineno + 1)),
            }
        }
        Ok(config)
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.limits;
        writeln!(f, "cache_path = {}", self.cache_path.display())?;
        writeln!(f, "max_table_n = {}", self.max_table_n)?;
        writeln!(f, "thm1_n = {}", l.thm1_n)?;
        writeln!(f, "thm1_d = {}", l.thm1_d)?;
        writeln!(f, "littlewood_size = {}", l.littlewood_size)?;
        writeln!(f, "thm2_n = {}", l.thm2_n)?;
        writeln!(f, "thm2_d = {}", l.thm2_d)?;
        writeln!(f, "oracle_n = {}", l.oracle_n)?;
        writeln!(f, "output_format = {}", self.output_format)?;
        writeln!(f, "parallelism = {}", self.parallelism)
    }
}
