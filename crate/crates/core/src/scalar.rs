//! Coefficient types for symmetric functions and class functions.
//!
//! Everything in the engine is exact. [`Scalar`] is implemented for
//! arbitrary-precision rationals and for `i64`-backed rationals; the latter
//! is faster but panics if an intermediate value leaves the `i64` range.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num::rational::{Ratio, Rational64};
use num::{BigInt, BigRational, One, Signed, ToPrimitive};

pub trait Scalar:
    num::Num + Signed + Clone + Debug + Display + FromStr + Send + Sync + 'static
{
    fn from_bigint(n: &BigInt) -> Self;

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        Self::from_bigint(num) / Self::from_bigint(den)
    }

    fn from_usize(n: usize) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// The value as an integer, if it is one.
    fn to_integer(&self) -> Option<BigInt>;

    fn is_integer(&self) -> bool {
        self.to_integer().is_some()
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        Ratio::from_integer(n.clone())
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        Ratio::new(num.clone(), den.clone())
    }

    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }
}

impl Scalar for Rational64 {
    fn from_bigint(n: &BigInt) -> Self {
        let n = n
            .to_i64()
            .unwrap_or_else(|| panic!("{n} does not fit a 64-bit rational"));
        Ratio::from_integer(n)
    }

    fn to_integer(&self) -> Option<BigInt> {
        self.denom().is_one().then(|| BigInt::from(*self.numer()))
    }
}
