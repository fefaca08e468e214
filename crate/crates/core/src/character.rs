//! Irreducible character values of symmetric groups by the
//! Murnaghan–Nakayama rule, memoized in a shareable, persistable cache.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::sync::{Mutex, RwLock};

use num::{BigInt, One, Zero};
use rayon::prelude::*;

use crate::abacus::remove_ribbons;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Default bound on `n` for full character tables (`p(18) = 385` rows).
pub const DEFAULT_MAX_TABLE_N: usize = 18;

type Key = (Partition, Partition);

/// Memo of `χ^ν_ρ` values.
///
/// Every pair evaluated, including the intermediate pairs met during the
/// recursion, is stored. Reads take a shared lock; inserts are serialized.
/// A value computed twice by racing threads is identical, so a lost insert
/// only costs a recomputation.
#[derive(Default)]
pub struct CharCache {
    values: RwLock<HashMap<Key, BigInt>>,
    // entries added since the last load/flush
    pending: Mutex<Vec<Key>>,
}

impl CharCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Loads a cache file written by [`CharCache::flush`]. A missing file
    /// yields an empty cache.
    pub fn open(path: &Path) -> Result<Self> {
        let cache = Self::new();
        if path.exists() {
            cache.load(path)?;
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Merges the entries of a cache file. Every line must parse, both
    /// partitions must have the same size, and repeated keys must agree with
    /// each other and with what is already cached.
    pub fn load(&self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        let mut values = self.values.write().expect("cache lock poisoned");
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = parse_line(line)
                .map_err(|e| Error::Format(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
            match values.get(&key) {
                Some(existing) if *existing != value => {
                    return Err(Error::CacheConflict {
                        key: format!("{}|{}", key.0, key.1),
                        existing: existing.to_string(),
                        incoming: value.to_string(),
                    });
                }
                Some(_) => {}
                None => {
                    values.insert(key, value);
                }
            }
        }
        Ok(())
    }

    /// Appends every entry computed since the last load or flush, sorted by
    /// key, in a single write. Returns the number of lines written.
    pub fn flush(&self, path: &Path) -> Result<usize> {
        let mut pending = self.pending.lock().expect("cache lock poisoned");
        if pending.is_empty() {
            return Ok(0);
        }
        pending.sort();
        pending.dedup();
        let values = self.values.read().expect("cache lock poisoned");
        let mut buf = String::new();
        for key in pending.iter() {
            let value = &values[key];
            buf.push_str(&format!("{}|{}={}\n", key.0, key.1, value));
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        file.write_all(buf.as_bytes())?;
        file.sync_data()?;
        let written = pending.len();
        pending.clear();
        Ok(written)
    }

    fn get(&self, key: &Key) -> Option<BigInt> {
        self.values
            .read()
            .expect("cache lock poisoned")
            .get(key)
            .cloned()
    }

    fn insert(&self, key: Key, value: BigInt) {
        let mut values = self.values.write().expect("cache lock poisoned");
        if !values.contains_key(&key) {
            values.insert(key.clone(), value);
            self.pending.lock().expect("cache lock poisoned").push(key);
        }
    }

    /// The character value `χ^ν_ρ`.
    pub fn mn_value(&self, nu: &Partition, rho: &Partition) -> Result<BigInt> {
        if nu.size() != rho.size() {
            return Err(Error::DegreeMismatch {
                nu: nu.size(),
                rho: rho.size(),
            });
        }
        Ok(self.eval(nu, rho))
    }

    /// Strips a ribbon whose length is the largest remaining part of `rho`.
    fn eval(&self, nu: &Partition, rho: &Partition) -> BigInt {
        let Some(k) = rho.largest_part() else {
            return BigInt::one();
        };
        if nu.length() == 1 {
            return BigInt::one();
        }
        if rho.length() == 1 {
            return hook_value(nu);
        }
        let key = (nu.clone(), rho.clone());
        if let Some(v) = self.get(&key) {
            return v;
        }
        let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix of a partition");
        let mut total = BigInt::zero();
        for removal in remove_ribbons(nu, k) {
            let v = self.eval(&removal.smaller, &rest);
            if removal.sign > 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.insert(key, total.clone());
        total
    }

    /// Full table for `S_n`, rows and columns in canonical order.
    pub fn character_table(&self, n: usize, max_n: usize) -> Result<CharacterTable> {
        if n > max_n {
            return Err(Error::TableTooLarge { n, limit: max_n });
        }
        let labels = partitions_of(n);
        let values = labels
            .par_iter()
            .map(|lambda| {
                labels
                    .iter()
                    .map(|mu| self.eval(lambda, mu))
                    .collect::<Vec<_>>()
            })
            .collect();
        Ok(CharacterTable { n, labels, values })
    }
}

/// `χ^ν` on an `n`-cycle: `(-1)^k` on the hook `(n - k, 1^k)`, else zero.
fn hook_value(nu: &Partition) -> BigInt {
    let parts = nu.parts();
    if parts[1..].iter().all(|&p| p == 1) {
        if (parts.len() - 1).is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    } else {
        BigInt::zero()
    }
}

fn parse_line(line: &str) -> std::result::Result<(Key, BigInt), String> {
    let (key, value) = line
        .split_once('=')
        .ok_or_else(|| format!("missing '=' in {line:?}"))?;
    let (nu, rho) = key
        .split_once('|')
        .ok_or_else(|| format!("missing '|' in {line:?}"))?;
    let nu: Partition = nu.parse().map_err(|e| format!("{e}"))?;
    let rho: Partition = rho.parse().map_err(|e| format!("{e}"))?;
    if nu.size() != rho.size() {
        return Err(format!("degree mismatch in {line:?}"));
    }
    let value: BigInt = value
        .trim()
        .parse()
        .map_err(|_| format!("bad integer in {line:?}"))?;
    Ok(((nu, rho), value))
}

/// Character table of `S_n`: `values[i][j] = χ^{labels[i]}_{labels[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub labels: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn row(&self, lambda: &Partition) -> Option<&[BigInt]> {
        let i = self.labels.iter().position(|l| l == lambda)?;
        Some(&self.values[i])
    }
}
