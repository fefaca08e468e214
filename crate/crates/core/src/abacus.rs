//! Beta-sets (abacus configurations), ribbon removal, d-cores, d-quotients
//! and d-signs.
//!
//! A partition `λ` padded with zeros to length `t` is encoded by the beads
//! `λ_i + t - 1 - i`. Removing a ribbon of length `k` slides one bead from
//! position `b` to the vacant position `b - k`; the ribbon's height is the
//! number of beads strictly between the two positions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Strictly decreasing bead positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    betas: Vec<usize>,
}

impl BetaSet {
    /// Encodes `lambda` with `t` beads.
    pub fn new(lambda: &Partition, t: usize) -> Result<Self> {
        let length = lambda.length();
        if t < length {
            return Err(Error::BetaSetTooShort { length, t });
        }
        let parts = lambda.parts();
        let betas = (0..t)
            .map(|i| parts.get(i).copied().unwrap_or(0) + t - 1 - i)
            .collect();
        Ok(Self { betas })
    }

    /// Takes arbitrary distinct bead positions.
    pub fn from_positions(mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable_by(|a, b| b.cmp(a));
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "bead positions {positions:?} are not distinct"
            )));
        }
        Ok(Self { betas: positions })
    }

    pub fn betas(&self) -> &[usize] {
        &self.betas
    }

    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        let t = self.betas.len();
        Partition::from_unsorted(
            self.betas
                .iter()
                .enumerate()
                .map(|(i, &b)| b + i + 1 - t)
                .collect(),
        )
    }

    /// Bead counts per runner modulo `d`.
    fn runner_counts(&self, d: usize) -> Vec<usize> {
        let mut counts = vec![0; d];
        for &b in &self.betas {
            counts[b % d] += 1;
        }
        counts
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.betas)
    }
}

/// Beta-set with `t` beads; `t >= length(lambda)`.
pub fn beta_set(lambda: &Partition, t: usize) -> Result<BetaSet> {
    BetaSet::new(lambda, t)
}

/// One way of removing a ribbon from a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonRemoval {
    pub smaller: Partition,
    /// Rows spanned minus one.
    pub height: usize,
    /// `(-1)^height`.
    pub sign: i8,
}

/// All removals of a ribbon of length `len` from `lambda`, ordered by the
/// row of the ribbon's head counted from the bottom of the diagram, so the
/// lowest head comes first.
pub fn remove_ribbons(lambda: &Partition, len: usize) -> Vec<RibbonRemoval> {
    assert!(len >= 1, "ribbon length must be positive");
    let t = lambda.length();
    let beads = BetaSet::new(lambda, t).expect("t equals the length");
    let occupied: BTreeSet<usize> = beads.betas.iter().copied().collect();
    let mut out = Vec::new();
    for (row, &b) in beads.betas.iter().enumerate().rev() {
        if b < len || occupied.contains(&(b - len)) {
            continue;
        }
        let target = b - len;
        let height = occupied.range(target + 1..b).count();
        let mut moved = beads.betas.clone();
        moved[row] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        out.push(RibbonRemoval {
            smaller: BetaSet { betas: moved }.to_partition(),
            height,
            sign: if height.is_multiple_of(2) { 1 } else { -1 },
        });
    }
    out
}

fn runner_beta_set(nu: &Partition, d: usize) -> BetaSet {
    assert!(d >= 1, "d must be positive");
    let t = nu.length().div_ceil(d) * d;
    BetaSet::new(nu, t).expect("t is at least the length")
}

/// What is left after stripping all possible `d`-ribbons.
pub fn d_core(nu: &Partition, d: usize) -> Partition {
    let beads = runner_beta_set(nu, d);
    let positions = beads
        .runner_counts(d)
        .into_iter()
        .enumerate()
        .flat_map(|(r, k)| (0..k).map(move |j| j * d + r))
        .collect();
    BetaSet::from_positions(positions)
        .expect("runner positions are distinct")
        .to_partition()
}

/// The d-quotient, read off the runners of a beta-set of size
/// `d * ceil(length / d)`; entry `r` comes from the beads congruent to `r`
/// modulo `d`.
pub fn d_quotient(nu: &Partition, d: usize) -> Vec<Partition> {
    let beads = runner_beta_set(nu, d);
    (0..d)
        .map(|r| {
            let runner = beads
                .betas
                .iter()
                .filter(|&&b| b % d == r)
                .map(|&b| b / d)
                .collect();
            BetaSet::from_positions(runner)
                .expect("beads on a runner are distinct")
                .to_partition()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DSign {
    Plus,
    Minus,
    /// The d-core is nonempty, so there is no full d-ribbon tiling.
    Undefined,
}

impl DSign {
    pub fn value(self) -> Option<i8> {
        match self {
            DSign::Plus => Some(1),
            DSign::Minus => Some(-1),
            DSign::Undefined => None,
        }
    }
}

impl fmt::Display for DSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DSign::Plus => "+1",
            DSign::Minus => "-1",
            DSign::Undefined => "undefined",
        })
    }
}

/// Sign of a full d-ribbon tiling.
///
/// Every bead slides up its runner to the packed configuration; each time a
/// bead passes another one the relative order of that pair flips, so the
/// sign is the parity of pairs whose order differs between the start and
/// packed configurations.
pub fn d_sign(nu: &Partition, d: usize) -> DSign {
    if !d_core(nu, d).is_empty() {
        return DSign::Undefined;
    }
    let beads = runner_beta_set(nu, d);
    // beads are decreasing, so the k-th bead seen on runner r from the top
    // packs to slot (count_r - 1 - k).
    let counts = beads.runner_counts(d);
    let mut seen = vec![0; d];
    let packed: Vec<usize> = beads
        .betas
        .iter()
        .map(|&b| {
            let r = b % d;
            let slot = counts[r] - 1 - seen[r];
            seen[r] += 1;
            slot * d + r
        })
        .collect();
    let inversions = (0..packed.len())
        .flat_map(|i| (i + 1..packed.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| packed[i] < packed[j])
        .count();
    if inversions % 2 == 0 {
        DSign::Plus
    } else {
        DSign::Minus
    }
}
