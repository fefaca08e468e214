//! Integer partitions: the index set for both irreducible characters and
//! conjugacy classes of the symmetric group.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One};

use crate::error::Error;

/// A weakly decreasing sequence of positive parts.
///
/// Partitions are ordered first by size, then in descending lexicographic
/// order of their parts. Within a fixed size this is exactly the order of
/// [`partitions_of`], so ordered maps keyed by partitions iterate in the
/// canonical enumeration order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition, the unique partition of zero.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a partition from parts that are already weakly decreasing and
    /// positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if let Some(&0) = parts.last() {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from arbitrary parts, sorting them and dropping
    /// zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// The single-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Multiplicity view `part -> m_part`, parts ascending.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order `z = prod i^{m_i} m_i!` of a permutation with this
    /// cycle type.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            z *= BigInt::from(part).pow(mult as u32);
            z *= factorial(mult);
        }
        z
    }

    /// Size of the conjugacy class of this cycle type, `n! / z`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Subdivides every box of the diagram into a `d x d` grid: the part
    /// `i*d` occurs `d * m_i` times.
    pub fn boxplus(&self, d: usize) -> Self {
        assert!(d >= 1, "boxplus requires d >= 1");
        let parts = self
            .parts
            .iter()
            .flat_map(|&p| std::iter::repeat_n(p * d, d))
            .collect();
        Self { parts }
    }

    /// Multiplies every part by `d`.
    pub fn scale(&self, d: usize) -> Self {
        assert!(d >= 1, "scale requires d >= 1");
        Self {
            parts: self.parts.iter().map(|&p| p * d).collect(),
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Self { parts }
    }

    /// Union of `d` copies of `self`: the cycle type of a diagonal element
    /// `(w, ..., w)` of `S_n^d` where `w` has cycle type `self`.
    pub fn repeat(&self, d: usize) -> Self {
        let parts = self
            .parts
            .iter()
            .flat_map(|&p| std::iter::repeat_n(p, d))
            .collect();
        Self { parts }
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.largest_part().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Self { parts }
    }

    /// Whether `other`'s parts form a sub-multiset of `self`'s parts.
    pub fn contains_parts(&self, other: &Self) -> bool {
        let mine = self.multiplicities();
        other
            .multiplicities()
            .iter()
            .all(|(p, m)| mine.get(p).is_some_and(|have| have >= m))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `"4,4,2,2"`. The empty
    /// string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let part: usize = token
                .trim()
                .parse()
                .ok()
                .filter(|&p| p > 0)
                .ok_or_else(|| Error::Parse {
                    input: s.to_string(),
                    token: token.to_string(),
                })?;
            if parts.last().is_some_and(|&prev| prev < part) {
                return Err(Error::Parse {
                    input: s.to_string(),
                    token: token.to_string(),
                });
            }
            parts.push(part);
        }
        Ok(Self { parts })
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Self::from_unsorted(parts.to_vec())
    }
}

/// Shorthand used throughout tests and examples.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// Partition of `tuple.len()` formed by the multiplicities of the distinct
/// entries of `tuple`, sorted weakly decreasing.
pub fn multiplicity_pattern(tuple: &[Partition]) -> Partition {
    let mut counts: BTreeMap<&Partition, usize> = BTreeMap::new();
    for entry in tuple {
        *counts.entry(entry).or_insert(0) += 1;
    }
    Partition::from_unsorted(counts.into_values().collect())
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(3),
            vec![part![3], part![2, 1], part![1, 1, 1]]
        );
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn enumeration_is_sorted_by_ord() {
        for n in 0..9 {
            let ps = partitions_of(n);
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn multiplicities_and_centralizers() {
        assert_eq!(part![2, 1].multiplicity(1), 1);
        assert_eq!(part![2, 2, 2, 2].multiplicity(2), 4);
        assert_eq!(part![3].multiplicity(2), 0);
        assert_eq!(part![1, 1, 1].centralizer_order(), BigInt::from(6));
        assert_eq!(part![2, 1].centralizer_order(), BigInt::from(2));
        assert_eq!(part![4, 2].centralizer_order(), BigInt::from(8));
        assert_eq!(Partition::empty().centralizer_order(), BigInt::from(1));
    }

    #[test]
    fn boxplus_and_scale() {
        assert_eq!(part![1].boxplus(2), part![2, 2]);
        assert_eq!(part![2, 1].boxplus(2), part![4, 4, 2, 2]);
        assert_eq!(part![3, 1, 1].boxplus(1), part![3, 1, 1]);
        assert_eq!(part![2, 1].scale(3), part![6, 3]);
        assert_eq!(part![1, 1].scale(2), part![2, 2]);
        assert_eq!(Partition::empty().boxplus(3), Partition::empty());
    }

    #[test]
    fn unions() {
        assert_eq!(part![2, 1].union(&part![3, 1]), part![3, 2, 1, 1]);
        assert_eq!(Partition::empty().union(&part![2, 1]), part![2, 1]);
        assert_eq!(part![2, 1].repeat(2), part![2, 2, 1, 1]);
    }

    #[test]
    fn pattern_examples() {
        let tuple = [part![2, 1], part![3], part![1, 1, 1], part![3], part![2, 1]];
        assert_eq!(multiplicity_pattern(&tuple), part![2, 2, 1]);
        assert_eq!(multiplicity_pattern(&vec![part![2]; 4]), part![4]);
        assert_eq!(
            multiplicity_pattern(&[part![3], part![2, 1], part![1, 1, 1]]),
            part![1, 1, 1]
        );
    }

    #[test]
    fn conjugates() {
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(part![4].conjugate(), part![1, 1, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn text_form() {
        assert_eq!("4,4,2,2".parse::<Partition>().unwrap(), part![4, 4, 2, 2]);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(part![4, 4, 2, 2].to_string(), "4,4,2,2");
        match "3,x".parse::<Partition>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }
}
