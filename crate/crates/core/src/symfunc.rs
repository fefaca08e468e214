//! Sparse symmetric functions with exact coefficients in the power-sum and
//! Schur bases, the Hall inner product, the substitution `ψ^d` and its
//! adjoint `φ_d`.
//!
//! The power-sum basis is the working basis: products are unions of keys,
//! the Hall pairing is diagonal, `ψ^d` scales keys and `φ_d` divides them.
//! Schur expansions are reached through the character table, so operations
//! that may need to convert take a [`CharCache`].

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;
use serde_json::{json, Map, Value};

use crate::abacus::{d_core, d_quotient, d_sign, DSign};
use crate::character::CharCache;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    PowerSum,
    Schur,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        }
    }
}

/// A finite linear combination of basis elements indexed by partitions.
/// No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc<T> {
    basis: Basis,
    terms: BTreeMap<Partition, T>,
}

impl<T: Scalar> SymFunc<T> {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `p_∅ = s_∅ = 1`.
    pub fn one() -> Self {
        Self::basis_element(Basis::PowerSum, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, T::one());
        Self { basis, terms }
    }

    /// `p_μ`.
    pub fn p(mu: Partition) -> Self {
        Self::basis_element(Basis::PowerSum, mu)
    }

    /// `s_λ`, tagged in the Schur basis.
    pub fn s(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    /// Collects terms, summing repeated keys and dropping zeros.
    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, T)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, T> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> T {
        self.terms.get(lambda).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every key is a partition of `n`.
    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|k| k.size() == n)
    }

    /// The degree-`n` component.
    pub fn component(&self, n: usize) -> Self {
        Self {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == n)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, lambda: Partition, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        Self {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// JSON form `{"basis": "p"|"s", "terms": {"<partition>": "<rational>"}}`,
    /// keys in canonical order.
    pub fn to_json(&self) -> Value {
        let terms: Map<String, Value> = self
            .terms
            .iter()
            .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
            .collect();
        json!({ "basis": self.basis.tag(), "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let basis = match value.get("basis").and_then(Value::as_str) {
            Some("p") => Basis::PowerSum,
            Some("s") => Basis::Schur,
            other => return Err(Error::Format(format!("unknown basis {other:?}"))),
        };
        let terms = value
            .get("terms")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Format("missing \"terms\" object".into()))?;
        let mut f = Self::zero(basis);
        for (k, c) in terms {
            let lambda: Partition = k.parse()?;
            let c = c
                .as_str()
                .and_then(|s| s.parse::<T>().ok())
                .ok_or_else(|| Error::Format(format!("bad coefficient for {k:?}: {c}")))?;
            f.add_term(lambda, c);
        }
        Ok(f)
    }
}

impl<T: Scalar> Add for SymFunc<T> {
    type Output = Self;

    /// Panics if the bases differ.
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(
            self.basis, rhs.basis,
            "adding expansions in different bases"
        );
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<T: Scalar> Neg for SymFunc<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            basis: self.basis,
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<T: Scalar> Sub for SymFunc<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul<&T> for SymFunc<T> {
    type Output = Self;

    fn mul(self, c: &T) -> Self {
        self.scaled(c)
    }
}

/// `s_λ = Σ_μ χ^λ_μ / z_μ · p_μ`.
pub fn schur_to_power<T: Scalar>(cache: &CharCache, lambda: &Partition) -> SymFunc<T> {
    let terms = partitions_of(lambda.size()).into_iter().map(|mu| {
        let chi = cache.mn_value(lambda, &mu).expect("equal sizes");
        let c = T::from_ratio(&chi, &mu.centralizer_order());
        (mu, c)
    });
    SymFunc::from_terms(Basis::PowerSum, terms)
}

/// Re-expresses `f` in the power-sum basis.
pub fn to_power<T: Scalar>(cache: &CharCache, f: &SymFunc<T>) -> SymFunc<T> {
    match f.basis {
        Basis::PowerSum => f.clone(),
        Basis::Schur => f
            .terms
            .iter()
            .fold(SymFunc::zero(Basis::PowerSum), |acc, (lambda, c)| {
                acc + schur_to_power::<T>(cache, lambda).scaled(c)
            }),
    }
}

/// Re-expresses `f` in the Schur basis; the coefficient of `s_λ` is
/// `⟨f, s_λ⟩ = Σ_μ f_μ χ^λ_μ`.
pub fn power_to_schur<T: Scalar>(cache: &CharCache, f: &SymFunc<T>) -> SymFunc<T> {
    if f.basis == Basis::Schur {
        return f.clone();
    }
    let degrees: std::collections::BTreeSet<usize> = f.terms.keys().map(Partition::size).collect();
    let mut out = SymFunc::zero(Basis::Schur);
    for n in degrees {
        for lambda in partitions_of(n) {
            let mut c = T::zero();
            for (mu, coeff) in f.terms.range(first_of(n)..) {
                if mu.size() != n {
                    break;
                }
                let chi = cache.mn_value(&lambda, mu).expect("equal sizes");
                if !chi.is_zero() {
                    c = c + coeff.clone() * T::from_bigint(&chi);
                }
            }
            out.add_term(lambda, c);
        }
    }
    out
}

// smallest partition of n in the canonical order
fn first_of(n: usize) -> Partition {
    Partition::row(n)
}

/// Product, computed in the power-sum basis where `p_μ p_ν = p_{μ∪ν}`.
pub fn multiply<T: Scalar>(cache: &CharCache, f: &SymFunc<T>, g: &SymFunc<T>) -> SymFunc<T> {
    let f = to_power(cache, f);
    let g = to_power(cache, g);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (mu, a) in &f.terms {
        for (nu, b) in &g.terms {
            out.add_term(mu.union(nu), a.clone() * b.clone());
        }
    }
    out
}

/// `f^d` in the power-sum basis; `f^0 = 1`.
pub fn power_d<T: Scalar>(cache: &CharCache, f: &SymFunc<T>, d: usize) -> SymFunc<T> {
    let f = to_power(cache, f);
    (0..d).fold(SymFunc::one(), |acc, _| multiply(cache, &acc, &f))
}

/// Hall inner product: Schur functions are orthonormal and
/// `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
pub fn hall_inner<T: Scalar>(cache: &CharCache, f: &SymFunc<T>, g: &SymFunc<T>) -> T {
    if f.basis == Basis::Schur && g.basis == Basis::Schur {
        return pair(f, g, |_| T::one());
    }
    let f = to_power(cache, f);
    let g = to_power(cache, g);
    pair(&f, &g, |mu| T::from_bigint(&mu.centralizer_order()))
}

fn pair<T: Scalar>(f: &SymFunc<T>, g: &SymFunc<T>, weight: impl Fn(&Partition) -> T) -> T {
    let (small, large) = if f.terms.len() <= g.terms.len() {
        (f, g)
    } else {
        (g, f)
    };
    small
        .terms
        .iter()
        .filter_map(|(k, a)| {
            large
                .terms
                .get(k)
                .map(|b| a.clone() * b.clone() * weight(k))
        })
        .fold(T::zero(), |acc, x| acc + x)
}

/// `ψ^d`: substitutes `x_i -> x_i^d`, so `p_μ -> p_{d·μ}`.
pub fn psi_d<T: Scalar>(cache: &CharCache, f: &SymFunc<T>, d: usize) -> SymFunc<T> {
    assert!(d >= 1, "psi_d requires d >= 1");
    let f = to_power(cache, f);
    SymFunc {
        basis: Basis::PowerSum,
        terms: f.terms.into_iter().map(|(k, c)| (k.scale(d), c)).collect(),
    }
}

/// `φ_d`, the Hall adjoint of `ψ^d`: `p_{d·μ} -> d^{ℓ(μ)} p_μ`, and `p_ν -> 0`
/// when some part of `ν` is not divisible by `d`.
pub fn phi_d_power<T: Scalar>(cache: &CharCache, f: &SymFunc<T>, d: usize) -> SymFunc<T> {
    assert!(d >= 1, "phi_d requires d >= 1");
    let f = to_power(cache, f);
    let d_scalar = T::from_usize(d);
    let terms = f.terms.into_iter().filter_map(|(nu, c)| {
        if nu.parts().iter().any(|p| p % d != 0) {
            return None;
        }
        let mu =
            Partition::new(nu.parts().iter().map(|p| p / d).collect()).expect("still decreasing");
        let weight = (0..mu.length()).fold(T::one(), |acc, _| acc * d_scalar.clone());
        Some((mu, c * weight))
    });
    SymFunc::from_terms(Basis::PowerSum, terms)
}

/// `φ_d(s_ν)` from the abacus: `ε_d(ν) · s_{ν^(0)} ⋯ s_{ν^(d-1)}` over the
/// d-quotient, and zero when the d-core of `ν` is nonempty. Returned in the
/// power-sum basis.
pub fn phi_d_littlewood<T: Scalar>(cache: &CharCache, nu: &Partition, d: usize) -> SymFunc<T> {
    assert!(d >= 1, "phi_d requires d >= 1");
    if !d_core(nu, d).is_empty() {
        return SymFunc::zero(Basis::PowerSum);
    }
    let product = d_quotient(nu, d).iter().fold(SymFunc::one(), |acc, q| {
        multiply(cache, &acc, &schur_to_power::<T>(cache, q))
    });
    match d_sign(nu, d) {
        DSign::Plus => product,
        DSign::Minus => -product,
        DSign::Undefined => unreachable!("empty core has a sign"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use num::{BigRational, Rational64};

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn schur_expansions() {
        let cache = CharCache::new();
        assert_eq!(schur_to_power::<Q>(&cache, &part![1]), SymFunc::p(part![1]));
        let s2 = schur_to_power::<Q>(&cache, &part![2]);
        assert_eq!(s2.terms().len(), 2);
        assert_eq!(s2.coefficient(&part![1, 1]), q(1, 2));
        assert_eq!(s2.coefficient(&part![2]), q(1, 2));
        let s11 = schur_to_power::<Q>(&cache, &part![1, 1]);
        assert_eq!(s11.coefficient(&part![1, 1]), q(1, 2));
        assert_eq!(s11.coefficient(&part![2]), q(-1, 2));
        // χ^{(2,2)} vanishes on (4) and (2,1,1): keys omitted
        let s22 = schur_to_power::<Q>(&cache, &part![2, 2]);
        assert_eq!(
            s22.terms().keys().cloned().collect::<Vec<_>>(),
            vec![part![3, 1], part![2, 2], part![1, 1, 1, 1]]
        );
    }

    #[test]
    fn power_to_schur_examples() {
        let cache = CharCache::new();
        let p11 = power_to_schur(&cache, &SymFunc::<Q>::p(part![1, 1]));
        assert_eq!(
            p11,
            SymFunc::from_terms(Basis::Schur, [(part![2], q(1, 1)), (part![1, 1], q(1, 1))])
        );
        let p2 = power_to_schur(&cache, &SymFunc::<Q>::p(part![2]));
        assert_eq!(
            p2,
            SymFunc::from_terms(Basis::Schur, [(part![2], q(1, 1)), (part![1, 1], q(-1, 1))])
        );
        for n in 0..=7 {
            for lambda in partitions_of(n) {
                let back = power_to_schur(&cache, &schur_to_power::<Q>(&cache, &lambda));
                assert_eq!(back, SymFunc::s(lambda));
            }
        }
    }

    #[test]
    fn products() {
        let cache = CharCache::new();
        let f = multiply(
            &cache,
            &SymFunc::<Q>::p(part![2, 1]),
            &SymFunc::p(part![3, 1]),
        );
        assert_eq!(f, SymFunc::p(part![3, 2, 1, 1]));
        let s1s1 = multiply(&cache, &SymFunc::<Q>::s(part![1]), &SymFunc::s(part![1]));
        assert_eq!(
            power_to_schur(&cache, &s1s1),
            SymFunc::from_terms(Basis::Schur, [(part![2], q(1, 1)), (part![1, 1], q(1, 1))])
        );
        let g = schur_to_power::<Q>(&cache, &part![2, 1]);
        assert_eq!(multiply(&cache, &g, &SymFunc::one()), g);
    }

    #[test]
    fn powers() {
        let cache = CharCache::new();
        assert_eq!(
            power_d(&cache, &SymFunc::<Q>::p(part![2, 1]), 2),
            SymFunc::p(part![2, 2, 1, 1])
        );
        let s2 = SymFunc::<Q>::s(part![2]);
        let squared = power_to_schur(&cache, &power_d(&cache, &s2, 2));
        let expected = SymFunc::from_terms(
            Basis::Schur,
            [
                (part![4], q(1, 1)),
                (part![3, 1], q(1, 1)),
                (part![2, 2], q(1, 1)),
            ],
        );
        assert_eq!(squared, expected);
        // independent route: square (p_11 + p_2)/2 by hand
        let half = q(1, 2);
        let by_hand = SymFunc::from_terms(
            Basis::PowerSum,
            [
                (part![1, 1, 1, 1], half.clone() * half.clone()),
                (part![2, 1, 1], q(2, 1) * half.clone() * half.clone()),
                (part![2, 2], half.clone() * half),
            ],
        );
        assert_eq!(power_d(&cache, &s2, 2), by_hand);
        assert_eq!(power_d(&cache, &s2, 1), to_power(&cache, &s2));
    }

    #[test]
    fn hall_pairings() {
        let cache = CharCache::new();
        let p21 = SymFunc::<Q>::p(part![2, 1]);
        assert_eq!(hall_inner(&cache, &p21, &p21), q(2, 1));
        assert_eq!(hall_inner(&cache, &p21, &SymFunc::p(part![3])), q(0, 1));
        let s21 = SymFunc::<Q>::s(part![2, 1]);
        assert_eq!(hall_inner(&cache, &s21, &s21), q(1, 1));
        let s21p = to_power(&cache, &s21);
        assert_eq!(hall_inner(&cache, &s21p, &s21p), q(1, 1));
        for n in 0..=6 {
            let ps = partitions_of(n);
            let expansions: Vec<_> = ps.iter().map(|l| schur_to_power::<Q>(&cache, l)).collect();
            for (i, a) in expansions.iter().enumerate() {
                for (j, b) in expansions.iter().enumerate() {
                    let expected = if i == j { q(1, 1) } else { q(0, 1) };
                    assert_eq!(hall_inner(&cache, a, b), expected);
                }
            }
        }
    }

    #[test]
    fn psi_and_phi_examples() {
        let cache = CharCache::new();
        assert_eq!(
            psi_d(&cache, &SymFunc::<Q>::p(part![2, 1]), 2),
            SymFunc::p(part![4, 2])
        );
        let f = schur_to_power::<Q>(&cache, &part![3, 1]);
        assert_eq!(psi_d(&cache, &f, 1), f);
        assert_eq!(phi_d_power(&cache, &f, 1), f);
        assert_eq!(
            phi_d_power(&cache, &SymFunc::<Q>::p(part![4, 2]), 2),
            SymFunc::p(part![2, 1]).scaled(&q(4, 1))
        );
        assert!(phi_d_power(&cache, &SymFunc::<Q>::p(part![3]), 2).is_zero());
    }

    #[test]
    fn phi_is_multiplicative() {
        let cache = CharCache::new();
        let p1 = SymFunc::<Q>::p(part![1]);
        assert!(phi_d_power(&cache, &multiply(&cache, &p1, &p1), 2).is_zero());
        let p2 = SymFunc::<Q>::p(part![2]);
        assert_eq!(
            phi_d_power(&cache, &multiply(&cache, &p2, &p2), 2),
            SymFunc::p(part![1, 1]).scaled(&q(4, 1))
        );
        for d in [2, 3] {
            for a in partitions_of(4) {
                for b in partitions_of(3) {
                    let f = schur_to_power::<Q>(&cache, &a);
                    let g = schur_to_power::<Q>(&cache, &b) + SymFunc::p(part![3, 3]);
                    let lhs = phi_d_power(&cache, &multiply(&cache, &f, &g), d);
                    let rhs = multiply(
                        &cache,
                        &phi_d_power(&cache, &f, d),
                        &phi_d_power(&cache, &g, d),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn littlewood_examples() {
        let cache = CharCache::new();
        let lhs = phi_d_littlewood::<Q>(&cache, &part![2, 2, 2, 2], 2);
        let s11 = SymFunc::<Q>::s(part![1, 1]);
        assert_eq!(lhs, power_d(&cache, &s11, 2));
        assert!(phi_d_littlewood::<Q>(&cache, &part![2, 1], 2).is_zero());
        let via_adjoint = phi_d_power(&cache, &schur_to_power::<Q>(&cache, &part![2, 1]), 2);
        assert!(via_adjoint.is_zero());
        for n in 0..=4 {
            for lambda in partitions_of(n) {
                for d in [2, 3] {
                    let nu = lambda.boxplus(d);
                    let expected = power_d(&cache, &SymFunc::<Q>::s(lambda.clone()), d);
                    assert_eq!(phi_d_littlewood::<Q>(&cache, &nu, d), expected);
                }
            }
        }
    }

    #[test]
    fn littlewood_agrees_with_adjoint() {
        let cache = CharCache::new();
        for m in 0..=8 {
            for nu in partitions_of(m) {
                for d in [1, 2, 3] {
                    let abacus = phi_d_littlewood::<Q>(&cache, &nu, d);
                    let adjoint = phi_d_power(&cache, &schur_to_power::<Q>(&cache, &nu), d);
                    assert_eq!(abacus, adjoint, "nu={nu:?} d={d}");
                }
            }
        }
    }

    #[test]
    fn small_rationals_agree_with_big() {
        let cache = CharCache::new();
        for lambda in partitions_of(4) {
            let big = power_d(&cache, &SymFunc::<Q>::s(lambda.clone()), 2);
            let small = power_d(&cache, &SymFunc::<Rational64>::s(lambda), 2);
            assert_eq!(big.to_json(), small.to_json());
        }
    }

    #[test]
    fn json_form() {
        let f = SymFunc::from_terms(
            Basis::PowerSum,
            [(part![2], q(-1, 2)), (part![1, 1], q(3, 1))],
        );
        let v = f.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"basis":"p","terms":{"2":"-1/2","1,1":"3"}}"#
        );
        assert_eq!(SymFunc::<Q>::from_json(&v).unwrap(), f);
        assert!(SymFunc::<Q>::from_json(&json!({"basis": "m", "terms": {}})).is_err());
    }
}
