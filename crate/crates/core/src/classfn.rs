//! Class functions on `S_n`, the characteristic map and the embedded class
//! functions `⊞^d(χ^λ)` and `χ^{d·λ}`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::character::CharCache;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::Scalar;
use crate::symfunc::{
    hall_inner, multiply, power_d, power_to_schur, schur_to_power, to_power, Basis, SymFunc,
};

/// A class function on `S_n`, stored by cycle type. The keys are exactly the
/// partitions of `level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction<T> {
    level: usize,
    values: BTreeMap<Partition, T>,
}

impl<T: Scalar> ClassFunction<T> {
    pub fn new(level: usize, values: BTreeMap<Partition, T>) -> Result<Self> {
        let expected = partitions_of(level);
        if values.len() != expected.len() || !expected.iter().all(|mu| values.contains_key(mu)) {
            return Err(Error::InvalidArgument(format!(
                "class function values must be keyed by exactly the partitions of {level}"
            )));
        }
        Ok(Self { level, values })
    }

    pub fn from_fn(level: usize, mut f: impl FnMut(&Partition) -> T) -> Self {
        let values = partitions_of(level)
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        Self { level, values }
    }

    pub fn zero(level: usize) -> Self {
        Self::from_fn(level, |_| T::zero())
    }

    /// The irreducible character `χ^λ`.
    pub fn irreducible(cache: &CharCache, lambda: &Partition) -> Self {
        Self::from_fn(lambda.size(), |mu| {
            T::from_bigint(&cache.mn_value(lambda, mu).expect("equal sizes"))
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn values(&self) -> &BTreeMap<Partition, T> {
        &self.values
    }

    /// Value on the class of cycle type `mu`; zero off level.
    pub fn value(&self, mu: &Partition) -> T {
        self.values.get(mu).cloned().unwrap_or_else(T::zero)
    }

    /// Whether every value is an integer, as every genuine character's is.
    pub fn is_integer_valued(&self) -> bool {
        self.values.values().all(Scalar::is_integer)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::InvalidArgument(format!(
                "adding class functions of levels {} and {}",
                self.level, other.level
            )));
        }
        Ok(Self::from_fn(self.level, |mu| {
            self.value(mu) + other.value(mu)
        }))
    }

    pub fn scaled(&self, c: &T) -> Self {
        Self::from_fn(self.level, |mu| self.value(mu) * c.clone())
    }

    /// JSON form `{"n": level, "values": {"<partition>": "<rational>"}}`.
    pub fn to_json(&self) -> Value {
        let values: Map<String, Value> = self
            .values
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect();
        json!({ "n": self.level, "values": values })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let level = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Format("missing integer \"n\"".into()))?
            as usize;
        let raw = value
            .get("values")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Format("missing \"values\" object".into()))?;
        let mut values = BTreeMap::new();
        for (k, v) in raw {
            let mu: Partition = k.parse()?;
            let parsed = match v {
                Value::String(s) => s.parse::<T>().ok(),
                Value::Number(n) => n.to_string().parse::<T>().ok(),
                _ => None,
            }
            .ok_or_else(|| Error::Format(format!("bad value for {k:?}: {v}")))?;
            values.insert(mu, parsed);
        }
        Self::new(level, values)
    }
}

impl<T: Scalar> fmt::Display for ClassFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (mu, v)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({mu}): {v}")?;
        }
        write!(f, "}}")
    }
}

/// Characteristic map `ch(φ) = Σ_μ φ(μ)/z_μ · p_μ`.
pub fn ch<T: Scalar>(phi: &ClassFunction<T>) -> SymFunc<T> {
    SymFunc::from_terms(
        Basis::PowerSum,
        phi.values.iter().map(|(mu, v)| {
            let z = T::from_bigint(&mu.centralizer_order());
            (mu.clone(), v.clone() / z)
        }),
    )
}

/// Inverse characteristic map: `φ(μ) = ⟨f, p_μ⟩`. `f` must be homogeneous
/// of degree `n`.
pub fn ch_inverse<T: Scalar>(
    cache: &CharCache,
    f: &SymFunc<T>,
    n: usize,
) -> Result<ClassFunction<T>> {
    let f = to_power(cache, f);
    if !f.is_homogeneous(n) {
        return Err(Error::NotHomogeneous(n));
    }
    Ok(ClassFunction::from_fn(n, |mu| {
        f.coefficient(mu) * T::from_bigint(&mu.centralizer_order())
    }))
}

/// `Ind_{S_n × S_m}^{S_{n+m}}(φ ⊗ ψ)`, computed as `ch^{-1}(ch φ · ch ψ)`.
pub fn induction_product<T: Scalar>(
    cache: &CharCache,
    phi: &ClassFunction<T>,
    psi: &ClassFunction<T>,
) -> ClassFunction<T> {
    let product = multiply(cache, &ch(phi), &ch(psi));
    ch_inverse(cache, &product, phi.level + psi.level).expect("product of homogeneous functions")
}

/// Multiplicities `⟨ch φ, s_λ⟩` of the irreducible characters, zeros
/// omitted.
pub fn decompose<T: Scalar>(cache: &CharCache, phi: &ClassFunction<T>) -> BTreeMap<Partition, T> {
    power_to_schur(cache, &ch(phi)).terms().clone()
}

/// `Σ m_λ χ^λ` at level `n`.
pub fn synthesize<T: Scalar>(
    cache: &CharCache,
    n: usize,
    multiplicities: &BTreeMap<Partition, T>,
) -> ClassFunction<T> {
    ClassFunction::from_fn(n, |mu| {
        multiplicities.iter().fold(T::zero(), |acc, (lambda, m)| {
            let chi = cache.mn_value(lambda, mu).expect("equal sizes");
            acc + m.clone() * T::from_bigint(&chi)
        })
    })
}

/// How `⊞^d(χ^λ)` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// `χ^{⊞^d(λ)}_{⊞^d(μ)}` by Murnaghan–Nakayama in `S_{d²n}`.
    Direct,
    /// `⟨s_λ^d, p_{μ^{∪d}}⟩` in the power-sum basis.
    Plethystic,
}

/// The class function `μ -> χ^{⊞^d(λ)}_{⊞^d(μ)}` on `S_n`.
pub fn boxplus_classfunction<T: Scalar>(
    cache: &CharCache,
    lambda: &Partition,
    d: usize,
    route: Route,
) -> ClassFunction<T> {
    assert!(d >= 1, "d must be positive");
    let n = lambda.size();
    match route {
        Route::Direct => {
            let big = lambda.boxplus(d);
            ClassFunction::from_fn(n, |mu| {
                T::from_bigint(&cache.mn_value(&big, &mu.boxplus(d)).expect("equal sizes"))
            })
        }
        Route::Plethystic => {
            let power = power_d(cache, &schur_to_power::<T>(cache, lambda), d);
            ClassFunction::from_fn(n, |mu| hall_inner(cache, &power, &SymFunc::p(mu.repeat(d))))
        }
    }
}

/// The class function `μ -> χ^{d·λ}_{d·μ}` on `S_n`.
pub fn scaled_classfunction<T: Scalar>(
    cache: &CharCache,
    lambda: &Partition,
    d: usize,
) -> ClassFunction<T> {
    assert!(d >= 1, "d must be positive");
    let big = lambda.scale(d);
    ClassFunction::from_fn(lambda.size(), |mu| {
        T::from_bigint(&cache.mn_value(&big, &mu.scale(d)).expect("equal sizes"))
    })
}
