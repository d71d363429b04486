//! Exact arithmetic primitives.
//!
//! Counts live in [`BigNat`] and every intermediate of the rational formulas
//! lives in [`BigRat`], which `num-rational` keeps reduced to lowest terms with
//! a positive denominator after every operation.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{DyckError, Result};

pub type BigNat = BigUint;
pub type BigRat = BigRational;

/// `n` choose `k`, with the convention that it is zero for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigNat {
    if k < 0 || k as u64 > n {
        return BigNat::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigNat::one();
    for i in 0..k {
        // acc = binom(n, i) here, so the division is exact.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `A(m, n) = binom(m + n, n) / (m + n)`.
pub fn a_value(m: u64, n: u64) -> Result<BigRat> {
    if m == 0 {
        return Err(DyckError::NotPositive { name: "m" });
    }
    if n == 0 {
        return Err(DyckError::NotPositive { name: "n" });
    }
    Ok(BigRat::new(
        BigInt::from(binomial(m + n, n as i64)),
        BigInt::from(m + n),
    ))
}

pub fn factorial(n: u64) -> BigNat {
    (2..=n).fold(BigNat::one(), |acc, i| acc * i)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn nat_to_rat(value: &BigNat) -> BigRat {
    BigRat::from_integer(BigInt::from(value.clone()))
}

/// The value of `r` as a natural number, if it is a non-negative integer.
pub fn rat_to_nat(r: &BigRat) -> Option<BigNat> {
    if r.is_integer() && !r.is_negative() {
        r.numer().to_biguint()
    } else {
        None
    }
}

/// Like [`rat_to_nat`], reporting a [`DyckError::NonIntegral`] otherwise.
pub(crate) fn expect_nat(r: &BigRat, what: impl Into<String>) -> Result<BigNat> {
    rat_to_nat(r).ok_or_else(|| DyckError::NonIntegral {
        what: what.into(),
        value: r.to_string(),
    })
}

pub fn rat(numer: i64, denom: i64) -> BigRat {
    BigRat::new(BigInt::from(numer), BigInt::from(denom))
}
