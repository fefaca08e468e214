//! Exhaustive checks of the embedding and congruence statements over small
//! parameter ranges, each by two independent evaluation routes.
//!
//! Every check collects all violations into a [`VerificationReport`] instead
//! of stopping at the first one.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::abacus::d_core;
use crate::character::CharCache;
use crate::classfn::{
    boxplus_classfunction, decompose, scaled_classfunction, synthesize, ClassFunction, Route,
};
use crate::error::{Error, Result};
use crate::partition::{factorial, multiplicity_pattern, partitions_of, Partition};
use crate::symfunc::{hall_inner, phi_d_littlewood, phi_d_power, power_d, schur_to_power, SymFunc};

type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    Thm1,
    Thm1Scaled,
    Littlewood,
    Thm2Div,
    Thm2Vanish,
    HallOracle,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Thm1,
        Theorem::Thm1Scaled,
        Theorem::Littlewood,
        Theorem::Thm2Div,
        Theorem::Thm2Vanish,
        Theorem::HallOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm1 => "thm1",
            Theorem::Thm1Scaled => "thm1-scaled",
            Theorem::Littlewood => "littlewood",
            Theorem::Thm2Div => "thm2-div",
            Theorem::Thm2Vanish => "thm2-vanish",
            Theorem::HallOracle => "oracle",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One violated relation, with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub inputs: Vec<(String, String)>,
    pub relation: String,
    pub computed: Vec<(String, String)>,
}

impl Failure {
    fn new(relation: impl Into<String>) -> Self {
        Self {
            inputs: Vec::new(),
            relation: relation.into(),
            computed: Vec::new(),
        }
    }

    fn input(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.inputs.push((name.to_string(), value.to_string()));
        self
    }

    fn value(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.computed.push((name.to_string(), value.to_string()));
        self
    }

    fn to_json(&self) -> Value {
        let obj = |pairs: &[(String, String)]| -> Value {
            Value::Object(
                pairs
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect::<Map<_, _>>(),
            )
        };
        json!({
            "inputs": obj(&self.inputs),
            "relation": self.relation,
            "computed": obj(&self.computed),
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub params: Vec<(String, String)>,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// JSON form. With `timing` off, `elapsed_ms` is written as 0 so that
    /// repeated runs serialize identically.
    pub fn to_json(&self, timing: bool) -> Value {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| {
                let value = v
                    .parse::<u64>()
                    .map(Value::from)
                    .unwrap_or_else(|_| Value::String(v.clone()));
                (k.clone(), value)
            })
            .collect();
        let elapsed_ms = if timing {
            self.elapsed.as_millis() as u64
        } else {
            0
        };
        json!({
            "theorem": self.theorem.name(),
            "params": params,
            "cases": self.cases,
            "failures": self.failures.iter().map(Failure::to_json).collect::<Vec<_>>(),
            "elapsed_ms": elapsed_ms,
            "status": self.status(),
        })
    }

    fn finish(
        theorem: Theorem,
        params: Vec<(&str, String)>,
        cases: usize,
        failures: Vec<Failure>,
        start: Instant,
    ) -> Self {
        Self {
            theorem,
            params: params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            cases,
            failures,
            elapsed: start.elapsed(),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{} [{}] {}: {} cases, {} failures",
            self.theorem,
            params.join(" "),
            self.status(),
            self.cases,
            self.failures.len()
        )
    }
}

/// Upper bounds for the sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub thm1_n: usize,
    pub thm1_d: usize,
    pub littlewood_size: usize,
    pub thm2_n: usize,
    pub thm2_d: usize,
    pub oracle_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            thm1_n: 5,
            thm1_d: 3,
            littlewood_size: 8,
            thm2_n: 4,
            thm2_d: 3,
            oracle_n: 3,
        }
    }
}

fn check_limit(name: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::LimitExceeded { name, value, limit })
    } else {
        Ok(())
    }
}

fn check_positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidArgument(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

fn q(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// `f^λ` by the hook length formula.
pub fn f_dim(lambda: &Partition) -> BigInt {
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(lambda.size()) / hooks
}

/// Ordered `d`-tuples of partitions of `n` whose parts together form the
/// multiset of parts of `mu`.
pub fn hall_tuples(mu: &Partition, n: usize, d: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    if mu.size() != n * d || mu.largest_part().is_some_and(|p| p > n) {
        return out;
    }
    let candidates = partitions_of(n);
    let remaining = mu.multiplicities();
    let mut current = Vec::with_capacity(d);
    extend_tuples(&candidates, remaining, d, &mut current, &mut out);
    out
}

fn extend_tuples(
    candidates: &[Partition],
    remaining: BTreeMap<usize, usize>,
    d: usize,
    current: &mut Vec<Partition>,
    out: &mut Vec<Vec<Partition>>,
) {
    if current.len() == d {
        if remaining.values().all(|&m| m == 0) {
            out.push(current.clone());
        }
        return;
    }
    for rho in candidates {
        let mut left = remaining.clone();
        let fits = rho
            .multiplicities()
            .into_iter()
            .all(|(p, m)| match left.get_mut(&p) {
                Some(have) if *have >= m => {
                    *have -= m;
                    true
                }
                _ => false,
            });
        if fits {
            current.push(rho.clone());
            extend_tuples(candidates, left, d, current, out);
            current.pop();
        }
    }
}

fn z_ratio(mu: &Partition, tuple: &[Partition]) -> BigInt {
    let denom = tuple
        .iter()
        .fold(BigInt::one(), |acc, rho| acc * rho.centralizer_order());
    let (ratio, rem) = mu.centralizer_order().div_rem(&denom);
    debug_assert!(rem.is_zero());
    ratio
}

/// `Π_i (m_i(μ) choose m_i(μ_(1)), …, m_i(μ_(d)))`.
fn multinomial_product(mu: &Partition, tuple: &[Partition]) -> BigInt {
    let mut product = BigInt::one();
    for (part, total) in mu.multiplicities() {
        let mut coeff = factorial(total);
        for rho in tuple {
            coeff /= factorial(rho.multiplicity(part));
        }
        product *= coeff;
    }
    product
}

fn tuple_term(
    cache: &CharCache,
    lambda: &Partition,
    mu: &Partition,
    tuple: &[Partition],
) -> BigInt {
    tuple.iter().fold(z_ratio(mu, tuple), |acc, rho| {
        acc * cache.mn_value(lambda, rho).expect("equal sizes")
    })
}

fn tuple_string(tuple: &[Partition]) -> String {
    let inner: Vec<String> = tuple.iter().map(|p| format!("({p})")).collect();
    format!("({})", inner.join(","))
}

fn check_oracle_args(lambda: &Partition, mu: &Partition, d: usize) -> Result<()> {
    check_positive("d", d)?;
    if mu.size() != d * lambda.size() {
        return Err(Error::DegreeMismatch {
            nu: d * lambda.size(),
            rho: mu.size(),
        });
    }
    Ok(())
}

/// `Σ z_μ / (z_{μ_(1)} ⋯ z_{μ_(d)}) · χ^λ_{μ_(1)} ⋯ χ^λ_{μ_(d)}` over the
/// ordered tuples of [`hall_tuples`].
pub fn hall_summation_oracle(
    cache: &CharCache,
    lambda: &Partition,
    mu: &Partition,
    d: usize,
) -> Result<Q> {
    check_oracle_args(lambda, mu, d)?;
    let total = hall_tuples(mu, lambda.size(), d)
        .iter()
        .fold(BigInt::zero(), |acc, tuple| {
            acc + tuple_term(cache, lambda, mu, tuple)
        });
    Ok(q(&total))
}

/// Groups the tuples of the Hall summation into rearrangement orbits and
/// checks, per orbit with multiplicity pattern `σ`: the z-ratio equals the
/// product of multinomials, is divisible by `σ_1!⋯σ_r!`, the orbit has
/// `d!/(σ_1!⋯σ_r!)` members, and the orbit's total is divisible by `d!`.
pub fn orbit_divisibility_check(
    cache: &CharCache,
    lambda: &Partition,
    mu: &Partition,
    d: usize,
) -> Result<VerificationReport> {
    check_oracle_args(lambda, mu, d)?;
    let start = Instant::now();
    let mut orbits: BTreeMap<Vec<Partition>, Vec<Vec<Partition>>> = BTreeMap::new();
    for tuple in hall_tuples(mu, lambda.size(), d) {
        let mut key = tuple.clone();
        key.sort();
        orbits.entry(key).or_default().push(tuple);
    }
    let d_fact = factorial(d);
    let mut failures = Vec::new();
    for (rep, members) in &orbits {
        let sigma = multiplicity_pattern(rep);
        let sigma_fact = sigma
            .parts()
            .iter()
            .fold(BigInt::one(), |acc, &s| acc * factorial(s));
        let fail = |relation: &str| {
            Failure::new(relation)
                .input("lambda", lambda)
                .input("mu", mu)
                .input("d", d)
                .input("orbit", tuple_string(rep))
                .value("sigma", &sigma)
        };
        let ratio = z_ratio(mu, rep);
        let multinomials = multinomial_product(mu, rep);
        if ratio != multinomials {
            failures.push(
                fail("z-ratio equals multinomial product")
                    .value("z_ratio", &ratio)
                    .value("multinomials", &multinomials),
            );
        }
        if !ratio.is_multiple_of(&sigma_fact) {
            failures.push(fail("sigma! divides z-ratio").value("z_ratio", &ratio));
        }
        let expected_size = &d_fact / &sigma_fact;
        if BigInt::from(members.len()) != expected_size {
            failures.push(
                fail("orbit size is d!/sigma!")
                    .value("size", members.len())
                    .value("expected", &expected_size),
            );
        }
        let contribution = members.iter().fold(BigInt::zero(), |acc, t| {
            acc + tuple_term(cache, lambda, mu, t)
        });
        if !contribution.is_multiple_of(&d_fact) {
            failures
                .push(fail("d! divides orbit contribution").value("contribution", &contribution));
        }
    }
    Ok(VerificationReport::finish(
        Theorem::HallOracle,
        vec![
            ("lambda", lambda.to_string()),
            ("mu", mu.to_string()),
            ("d", d.to_string()),
        ],
        orbits.len(),
        failures,
        start,
    ))
}

/// Runs the checks against a character cache under fixed limits.
pub struct Verifier<'a> {
    cache: &'a CharCache,
    limits: Limits,
}

impl<'a> Verifier<'a> {
    pub fn new(cache: &'a CharCache, limits: Limits) -> Self {
        Self { cache, limits }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// For every `λ ⊢ n`: the direct and plethystic evaluations of
    /// `⊞^d(χ^λ)` agree, its decomposition has nonnegative integer
    /// multiplicities that re-synthesize it, and its degree is
    /// `(dn)!/(n!)^d · (f^λ)^d`.
    pub fn verify_theorem1(&self, n: usize, d: usize) -> Result<VerificationReport> {
        check_positive("n", n)?;
        check_positive("d", d)?;
        check_limit("thm1_n", n, self.limits.thm1_n)?;
        check_limit("thm1_d", d, self.limits.thm1_d)?;
        let start = Instant::now();
        let lambdas = partitions_of(n);
        let failures = lambdas
            .par_iter()
            .map(|lambda| self.theorem1_case(lambda, d))
            .collect::<Vec<_>>()
            .concat();
        Ok(VerificationReport::finish(
            Theorem::Thm1,
            vec![("n", n.to_string()), ("d", d.to_string())],
            lambdas.len(),
            failures,
            start,
        ))
    }

    fn theorem1_case(&self, lambda: &Partition, d: usize) -> Vec<Failure> {
        let n = lambda.size();
        let mut failures = Vec::new();
        let direct = boxplus_classfunction::<Q>(self.cache, lambda, d, Route::Direct);
        let plethystic = boxplus_classfunction::<Q>(self.cache, lambda, d, Route::Plethystic);
        for mu in partitions_of(n) {
            let (a, b) = (direct.value(&mu), plethystic.value(&mu));
            if a != b {
                failures.push(
                    Failure::new("direct route equals plethystic route")
                        .input("lambda", lambda)
                        .input("d", d)
                        .input("mu", &mu)
                        .value("direct", a)
                        .value("plethystic", b),
                );
            }
        }
        failures.extend(self.character_checks(lambda, d, &direct, "boxplus"));

        let identity = Partition::column(n);
        let f = f_dim(lambda);
        let expected = factorial(d * n) / factorial(n).pow(d as u32) * f.pow(d as u32);
        let got = direct.value(&identity);
        if got != q(&expected) {
            failures.push(
                Failure::new("degree equals (dn)!/(n!)^d * (f^lambda)^d")
                    .input("lambda", lambda)
                    .input("d", d)
                    .value("degree", got)
                    .value("expected", expected),
            );
        }
        failures
    }

    /// Nonnegative integer multiplicities that re-synthesize `phi`.
    fn character_checks(
        &self,
        lambda: &Partition,
        d: usize,
        phi: &ClassFunction<Q>,
        label: &str,
    ) -> Vec<Failure> {
        let mut failures = Vec::new();
        let parts = decompose(self.cache, phi);
        for (rho, m) in &parts {
            if !m.is_integer() || m.is_negative() {
                failures.push(
                    Failure::new("multiplicity is a nonnegative integer")
                        .input("lambda", lambda)
                        .input("d", d)
                        .input("class_function", label)
                        .input("irreducible", rho)
                        .value("multiplicity", m),
                );
            }
        }
        let rebuilt = synthesize(self.cache, phi.level(), &parts);
        if rebuilt != *phi {
            failures.push(
                Failure::new("decomposition re-synthesizes the class function")
                    .input("lambda", lambda)
                    .input("d", d)
                    .input("class_function", label)
                    .value("original", phi)
                    .value("rebuilt", &rebuilt),
            );
        }
        failures
    }

    /// For every `λ ⊢ n`, `μ -> χ^{d·λ}_{d·μ}` is a character.
    pub fn verify_theorem1_scaled(&self, n: usize, d: usize) -> Result<VerificationReport> {
        check_positive("n", n)?;
        check_positive("d", d)?;
        check_limit("thm1_n", n, self.limits.thm1_n)?;
        check_limit("thm1_d", d, self.limits.thm1_d)?;
        let start = Instant::now();
        let lambdas = partitions_of(n);
        let failures = lambdas
            .par_iter()
            .map(|lambda| {
                let phi = scaled_classfunction::<Q>(self.cache, lambda, d);
                self.character_checks(lambda, d, &phi, "scaled")
            })
            .collect::<Vec<_>>()
            .concat();
        Ok(VerificationReport::finish(
            Theorem::Thm1Scaled,
            vec![("n", n.to_string()), ("d", d.to_string())],
            lambdas.len(),
            failures,
            start,
        ))
    }

    /// For every `ν` with `|ν| <= max_size`, the abacus formula for
    /// `φ_d(s_ν)` equals the power-sum adjoint applied to `s_ν`.
    pub fn verify_littlewood(&self, max_size: usize, d: usize) -> Result<VerificationReport> {
        check_positive("d", d)?;
        check_limit("littlewood_size", max_size, self.limits.littlewood_size)?;
        let start = Instant::now();
        let nus: Vec<Partition> = (0..=max_size).flat_map(partitions_of).collect();
        let failures: Vec<Failure> = nus
            .par_iter()
            .filter_map(|nu| {
                let abacus = phi_d_littlewood::<Q>(self.cache, nu, d);
                let adjoint = phi_d_power(self.cache, &schur_to_power::<Q>(self.cache, nu), d);
                let core_empty = d_core(nu, d).is_empty();
                if abacus != adjoint || (!core_empty && !adjoint.is_zero()) {
                    Some(
                        Failure::new("abacus route equals adjoint route")
                            .input("nu", nu)
                            .input("d", d)
                            .value("abacus", abacus.to_json())
                            .value("adjoint", adjoint.to_json()),
                    )
                } else {
                    None
                }
            })
            .collect();
        Ok(VerificationReport::finish(
            Theorem::Littlewood,
            vec![("max_size", max_size.to_string()), ("d", d.to_string())],
            nus.len(),
            failures,
            start,
        ))
    }

    /// For every `λ ⊢ n`, `μ ⊢ dn`: `d!` divides `χ^{⊞^d(λ)}_{d·μ}`, and the
    /// value equals `⟨s_λ^d, p_μ⟩`.
    pub fn verify_theorem2_div(&self, n: usize, d: usize) -> Result<VerificationReport> {
        check_positive("n", n)?;
        check_positive("d", d)?;
        check_limit("thm2_n", n, self.limits.thm2_n)?;
        check_limit("thm2_d", d, self.limits.thm2_d)?;
        let start = Instant::now();
        let lambdas = partitions_of(n);
        let mus = partitions_of(d * n);
        let d_fact = factorial(d);
        let failures = lambdas
            .par_iter()
            .map(|lambda| {
                let big = lambda.boxplus(d);
                let power = power_d(self.cache, &SymFunc::<Q>::s(lambda.clone()), d);
                let mut failures = Vec::new();
                for mu in &mus {
                    let value = self
                        .cache
                        .mn_value(&big, &mu.scale(d))
                        .expect("equal sizes");
                    if !value.is_multiple_of(&d_fact) {
                        failures.push(
                            Failure::new("d! divides chi^{boxplus(lambda)}_{d*mu}")
                                .input("lambda", lambda)
                                .input("mu", mu)
                                .input("d", d)
                                .value("value", &value),
                        );
                    }
                    let plethystic = hall_inner(self.cache, &power, &SymFunc::p(mu.clone()));
                    if plethystic != q(&value) {
                        failures.push(
                            Failure::new("value equals <s_lambda^d, p_mu>")
                                .input("lambda", lambda)
                                .input("mu", mu)
                                .input("d", d)
                                .value("value", &value)
                                .value("plethystic", plethystic),
                        );
                    }
                }
                failures
            })
            .collect::<Vec<_>>()
            .concat();
        Ok(VerificationReport::finish(
            Theorem::Thm2Div,
            vec![("n", n.to_string()), ("d", d.to_string())],
            lambdas.len() * mus.len(),
            failures,
            start,
        ))
    }

    /// For `d ∤ n` and all `λ, ν ⊢ n`: `χ^{⊞^d(λ)}_{d²·ν} = 0`.
    pub fn verify_theorem2_vanish(&self, n: usize, d: usize) -> Result<VerificationReport> {
        check_positive("n", n)?;
        check_positive("d", d)?;
        if n.is_multiple_of(d) {
            return Err(Error::DividesHypothesis { n, d });
        }
        check_limit("thm2_n", n, self.limits.thm2_n)?;
        check_limit("thm2_d", d, self.limits.thm2_d)?;
        let start = Instant::now();
        let lambdas = partitions_of(n);
        let failures = lambdas
            .par_iter()
            .map(|lambda| {
                let big = lambda.boxplus(d);
                lambdas
                    .iter()
                    .filter_map(|nu| {
                        let value = self
                            .cache
                            .mn_value(&big, &nu.scale(d * d))
                            .expect("equal sizes");
                        (!value.is_zero()).then(|| {
                            Failure::new("chi^{boxplus(lambda)}_{d^2*nu} = 0")
                                .input("lambda", lambda)
                                .input("nu", nu)
                                .input("d", d)
                                .value("value", &value)
                        })
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .concat();
        Ok(VerificationReport::finish(
            Theorem::Thm2Vanish,
            vec![("n", n.to_string()), ("d", d.to_string())],
            lambdas.len() * lambdas.len(),
            failures,
            start,
        ))
    }

    /// For every `λ ⊢ n`, `μ ⊢ dn`: the Hall summation equals the direct
    /// character value, and every rearrangement orbit passes
    /// [`orbit_divisibility_check`].
    pub fn verify_hall_oracle(&self, n: usize, d: usize) -> Result<VerificationReport> {
        check_positive("n", n)?;
        check_positive("d", d)?;
        check_limit("oracle_n", n, self.limits.oracle_n)?;
        check_limit("thm2_d", d, self.limits.thm2_d)?;
        let start = Instant::now();
        let lambdas = partitions_of(n);
        let mus = partitions_of(d * n);
        let failures = lambdas
            .par_iter()
            .map(|lambda| {
                let big = lambda.boxplus(d);
                let mut failures = Vec::new();
                for mu in &mus {
                    let direct = self
                        .cache
                        .mn_value(&big, &mu.scale(d))
                        .expect("equal sizes");
                    let oracle =
                        hall_summation_oracle(self.cache, lambda, mu, d).expect("checked sizes");
                    if oracle != q(&direct) {
                        failures.push(
                            Failure::new("Hall summation equals chi^{boxplus(lambda)}_{d*mu}")
                                .input("lambda", lambda)
                                .input("mu", mu)
                                .input("d", d)
                                .value("oracle", oracle)
                                .value("direct", &direct),
                        );
                    }
                    let orbits =
                        orbit_divisibility_check(self.cache, lambda, mu, d).expect("checked sizes");
                    failures.extend(orbits.failures);
                }
                failures
            })
            .collect::<Vec<_>>()
            .concat();
        Ok(VerificationReport::finish(
            Theorem::HallOracle,
            vec![("n", n.to_string()), ("d", d.to_string())],
            lambdas.len() * mus.len(),
            failures,
            start,
        ))
    }

    /// Runs one check at a single parameter pair.
    pub fn run(&self, theorem: Theorem, n: usize, d: usize) -> Result<VerificationReport> {
        match theorem {
            Theorem::Thm1 => self.verify_theorem1(n, d),
            Theorem::Thm1Scaled => self.verify_theorem1_scaled(n, d),
            Theorem::Littlewood => self.verify_littlewood(n, d),
            Theorem::Thm2Div => self.verify_theorem2_div(n, d),
            Theorem::Thm2Vanish => self.verify_theorem2_vanish(n, d),
            Theorem::HallOracle => self.verify_hall_oracle(n, d),
        }
    }

    /// Runs one check over its whole configured range: `n` (or the size
    /// bound) from 1 to its limit and `d` from 1 to its limit, skipping
    /// `d | n` for the vanishing statement.
    pub fn sweep(&self, theorem: Theorem) -> Result<Vec<VerificationReport>> {
        let l = self.limits;
        let (n_max, d_max) = match theorem {
            Theorem::Thm1 | Theorem::Thm1Scaled => (l.thm1_n, l.thm1_d),
            Theorem::Littlewood => (l.littlewood_size, 3),
            Theorem::Thm2Div | Theorem::Thm2Vanish => (l.thm2_n, l.thm2_d),
            Theorem::HallOracle => (l.oracle_n, l.thm2_d),
        };
        let mut reports = Vec::new();
        if theorem == Theorem::Littlewood {
            for d in 1..=d_max {
                reports.push(self.verify_littlewood(n_max, d)?);
            }
            return Ok(reports);
        }
        for n in 1..=n_max {
            for d in 1..=d_max {
                if theorem == Theorem::Thm2Vanish && n % d == 0 {
                    continue;
                }
                reports.push(self.run(theorem, n, d)?);
            }
        }
        Ok(reports)
    }

    /// Every sweep, in the order of [`Theorem::ALL`].
    pub fn sweep_all(&self) -> Result<Vec<VerificationReport>> {
        let mut reports = Vec::new();
        for theorem in Theorem::ALL {
            reports.extend(self.sweep(theorem)?);
        }
        Ok(reports)
    }
}
