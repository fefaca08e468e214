//! Exact symmetric functions and symmetric group characters.
//!
//! The crate provides partitions and their abacus data (d-cores,
//! d-quotients, d-signs), Murnaghan–Nakayama character values with a
//! persistable memo, sparse symmetric functions in the power-sum and Schur
//! bases with the plethystic operators `ψ^d` and `φ_d`, class functions with
//! the characteristic map, and an exhaustive checker for the class functions
//! `⊞^d(χ^λ)` and the `d!` congruences of their values.
//!
//! Coefficient arithmetic is generic over [`Scalar`]; [`SymFuncQ`] and
//! [`ClassFunctionQ`] fix it to arbitrary-precision rationals.

pub mod abacus;
pub mod character;
pub mod classfn;
pub mod error;
pub mod partition;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use abacus::{
    beta_set, d_core, d_quotient, d_sign, remove_ribbons, BetaSet, DSign, RibbonRemoval,
};
pub use character::{CharCache, CharacterTable, DEFAULT_MAX_TABLE_N};
pub use classfn::{
    boxplus_classfunction, ch, ch_inverse, decompose, induction_product, scaled_classfunction,
    synthesize, ClassFunction, Route,
};
pub use error::{Error, Result};
pub use partition::{factorial, multiplicity_pattern, partitions_of, Partition};
pub use scalar::Scalar;
pub use symfunc::{
    hall_inner, multiply, phi_d_littlewood, phi_d_power, power_d, power_to_schur, psi_d,
    schur_to_power, to_power, Basis, SymFunc,
};
pub use verify::{
    f_dim, hall_summation_oracle, hall_tuples, orbit_divisibility_check, Failure, Limits, Theorem,
    VerificationReport, Verifier,
};

pub use num::{BigInt, BigRational, Rational64};

/// Symmetric functions with arbitrary-precision rational coefficients.
pub type SymFuncQ = SymFunc<BigRational>;
/// Symmetric functions with `i64` rational coefficients (small degrees only).
pub type SymFunc64 = SymFunc<Rational64>;
/// Class functions with arbitrary-precision rational values.
pub type ClassFunctionQ = ClassFunction<BigRational>;
/// Class functions with `i64` rational values (small degrees only).
pub type ClassFunction64 = ClassFunction<Rational64>;
