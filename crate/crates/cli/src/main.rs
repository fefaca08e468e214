mod config;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use plethy_core::{
    boxplus_classfunction, d_core, d_quotient, d_sign, decompose, CharCache, ClassFunctionQ, DSign,
    Partition, Route, Theorem, VerificationReport, Verifier,
};

use config::{Config, OutputFormat};

/// Exact symmetric group characters, plethystic adjoints and embedding checks.
#[derive(Parser, Debug)]
#[command(name = "plethy", version)]
struct Cli {
    /// Configuration file (key = value lines).
    #[arg(long, global = true, env = "PLETHY_CONFIG")]
    config: Option<PathBuf>,
    /// Character cache file; overrides cache_path from the config.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Do not read or write the character cache file.
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Worker threads; defaults to the config value or the core count.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Record wall-clock times in verification reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character table of S_n.
    Table { n: usize },
    /// The class function mu -> chi^{boxplus_d(lambda)}_{boxplus_d(mu)} and its decomposition.
    Boxplus {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
        #[arg(long, value_enum, default_value_t = RouteArg::Direct)]
        route: RouteArg,
    },
    /// d-core, d-quotient and d-sign.
    Quotient {
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
    },
    /// Run verification sweeps; exit status 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Size bound for littlewood (defaults to --n when given).
        #[arg(long)]
        max_size: Option<usize>,
        /// Write the reports here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Direct,
    Plethystic,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Thm1,
    #[value(name = "thm1-scaled")]
    Thm1Scaled,
    Littlewood,
    #[value(name = "thm2-div")]
    Thm2Div,
    #[value(name = "thm2-vanish")]
    Thm2Vanish,
    Oracle,
    All,
}

impl Which {
    fn theorem(self) -> Option<Theorem> {
        match self {
            Which::Thm1 => Some(Theorem::Thm1),
            Which::Thm1Scaled => Some(Theorem::Thm1Scaled),
            Which::Littlewood => Some(Theorem::Littlewood),
            Which::Thm2Div => Some(Theorem::Thm2Div),
            Which::Thm2Vanish => Some(Theorem::Thm2Vanish),
            Which::Oracle => Some(Theorem::HallOracle),
            Which::All => None,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: plethy_core::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_config(cli: &Cli) -> Result<Config, Failure> {
    let mut config = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            text.parse::<Config>()
                .map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => Config::default(),
    };
    if let Some(path) = &cli.cache {
        config.cache_path = path.clone();
    }
    if let Some(format) = cli.format {
        config.output_format = format;
    }
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        config.parallelism = jobs;
    }
    Ok(config)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config = load_config(&cli)?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build_global()?;
    let cache = if cli.no_cache {
        CharCache::new()
    } else {
        CharCache::open(&config.cache_path)?
    };
    let result = dispatch(&cli, &config, &cache);
    if !cli.no_cache {
        cache.flush(&config.cache_path)?;
    }
    result
}

fn dispatch(cli: &Cli, config: &Config, cache: &CharCache) -> Result<(), Failure> {
    let format = config.output_format;
    match &cli.command {
        Command::Table { n } => {
            let table = cache.character_table(*n, config.max_table_n)?;
            let text = match format {
                OutputFormat::Json => {
                    let rows: Map<String, Value> = table
                        .labels
                        .iter()
                        .zip(&table.values)
                        .map(|(lambda, row)| {
                            let values: Map<String, Value> = table
                                .labels
                                .iter()
                                .zip(row)
                                .map(|(mu, v)| (mu.to_string(), Value::String(v.to_string())))
                                .collect();
                            (lambda.to_string(), json!({ "n": n, "values": values }))
                        })
                        .collect();
                    pretty(&json!({ "n": n, "characters": rows }))
                }
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    let mut header = vec!["lambda".to_string()];
                    header.extend(table.labels.iter().map(Partition::to_string));
                    w.write_record(&header)?;
                    for (lambda, row) in table.labels.iter().zip(&table.values) {
                        let mut record = vec![lambda.to_string()];
                        record.extend(row.iter().map(ToString::to_string));
                        w.write_record(&record)?;
                    }
                    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)?
                }
            };
            emit(&text, None)
        }
        Command::Boxplus { lambda, d, route } => {
            let d = *d as usize;
            let direct = || boxplus_classfunction(cache, lambda, d, Route::Direct);
            let plethystic = || boxplus_classfunction(cache, lambda, d, Route::Plethystic);
            let (phi, agree): (ClassFunctionQ, Option<bool>) = match route {
                RouteArg::Direct => (direct(), None),
                RouteArg::Plethystic => (plethystic(), None),
                RouteArg::Both => {
                    let (a, b) = (direct(), plethystic());
                    let agree = a == b;
                    (a, Some(agree))
                }
            };
            let parts = decompose(cache, &phi);
            let text = match format {
                OutputFormat::Json => {
                    let decomposition: Map<String, Value> = parts
                        .iter()
                        .map(|(k, m)| (k.to_string(), Value::String(m.to_string())))
                        .collect();
                    let mut out = json!({
                        "lambda": lambda.to_string(),
                        "d": d,
                        "route": format!("{route:?}").to_lowercase(),
                        "class_function": phi.to_json(),
                        "decomposition": decomposition,
                    });
                    if let Some(agree) = agree {
                        out["agree"] = Value::Bool(agree);
                    }
                    pretty(&out)
                }
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["kind", "partition", "value"])?;
                    for (mu, v) in phi.values() {
                        w.write_record(["value", &mu.to_string(), &v.to_string()])?;
                    }
                    for (rho, m) in &parts {
                        w.write_record(["multiplicity", &rho.to_string(), &m.to_string()])?;
                    }
                    if let Some(agree) = agree {
                        w.write_record(["agree", "", &agree.to_string()])?;
                    }
                    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)?
                }
            };
            emit(&text, None)?;
            if agree == Some(false) {
                return Err(Failure::Verification);
            }
            Ok(())
        }
        Command::Quotient { nu, d } => {
            let d = *d as usize;
            let core = d_core(nu, d);
            let quotient = d_quotient(nu, d);
            let sign = d_sign(nu, d);
            let text = match format {
                OutputFormat::Json => {
                    let sign = match sign {
                        DSign::Undefined => Value::String("undefined".into()),
                        s => Value::from(s.value().expect("defined sign")),
                    };
                    pretty(&json!({
                        "nu": nu.to_string(),
                        "d": d,
                        "core": core.to_string(),
                        "quotient": quotient.iter().map(Partition::to_string).collect::<Vec<_>>(),
                        "sign": sign,
                    }))
                }
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    let mut header =
                        vec!["nu".to_string(), "d".into(), "core".into(), "sign".into()];
                    header.extend((0..d).map(|r| format!("quotient_{r}")));
                    w.write_record(&header)?;
                    let mut record = vec![
                        nu.to_string(),
                        d.to_string(),
                        core.to_string(),
                        sign.to_string(),
                    ];
                    record.extend(quotient.iter().map(Partition::to_string));
                    w.write_record(&record)?;
                    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)?
                }
            };
            emit(&text, None)
        }
        Command::Verify {
            which,
            n,
            d,
            max_size,
            out,
        } => {
            let verifier = Verifier::new(cache, config.limits);
            let reports = run_verification(&verifier, *which, *n, *d, *max_size)?;
            for r in &reports {
                eprintln!("{r}");
            }
            let passed = reports.iter().all(VerificationReport::passed);
            let text = match format {
                OutputFormat::Json => pretty(&json!({
                    "status": if passed { "PASS" } else { "FAIL" },
                    "reports": reports.iter().map(|r| r.to_json(cli.timing)).collect::<Vec<_>>(),
                })),
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record([
                        "theorem",
                        "params",
                        "cases",
                        "failures",
                        "elapsed_ms",
                        "status",
                    ])?;
                    for r in &reports {
                        let params: Vec<String> =
                            r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        let elapsed = if cli.timing { r.elapsed.as_millis() } else { 0 };
                        w.write_record([
                            r.theorem.name().to_string(),
                            params.join(" "),
                            r.cases.to_string(),
                            r.failures.len().to_string(),
                            elapsed.to_string(),
                            r.status().to_string(),
                        ])?;
                    }
                    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)?
                }
            };
            emit(&text, out.as_ref())?;
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn run_verification(
    verifier: &Verifier,
    which: Which,
    n: Option<usize>,
    d: Option<usize>,
    max_size: Option<usize>,
) -> Result<Vec<VerificationReport>, Failure> {
    let single = n.is_some() || d.is_some() || max_size.is_some();
    let limits = verifier.limits();
    let single_run = |theorem: Theorem| -> Result<VerificationReport, Failure> {
        let (n_default, d_default) = match theorem {
            Theorem::Thm1 | Theorem::Thm1Scaled => (limits.thm1_n, limits.thm1_d),
            Theorem::Littlewood => (limits.littlewood_size, 2),
            Theorem::Thm2Div | Theorem::Thm2Vanish => (limits.thm2_n, limits.thm2_d),
            Theorem::HallOracle => (limits.oracle_n, limits.thm2_d),
        };
        let size = if theorem == Theorem::Littlewood {
            max_size.or(n).unwrap_or(n_default)
        } else {
            n.unwrap_or(n_default)
        };
        Ok(verifier.run(theorem, size, d.unwrap_or(d_default))?)
    };
    match (which.theorem(), single) {
        (Some(theorem), true) => Ok(vec![single_run(theorem)?]),
        (Some(theorem), false) => Ok(verifier.sweep(theorem)?),
        (None, false) => Ok(verifier.sweep_all()?),
        (None, true) => {
            let mut reports = Vec::new();
            for theorem in Theorem::ALL {
                let (nn, dd) = (n.unwrap_or(limits.thm2_n), d.unwrap_or(limits.thm2_d));
                if theorem == Theorem::Thm2Vanish && nn % dd == 0 {
                    continue;
                }
                reports.push(single_run(theorem)?);
            }
            Ok(reports)
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
