//! Finitely supported multiplicity sequences `a = (a_1, a_2, ...)`.
//!
//! A [`MultSeq`] with `norm(a) = d` is the multiplicity form of an integer
//! partition of `d`: `a_i` counts the parts equal to `i`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::arith::{binomial, factorial, nat_to_rat, BigNat, BigRat};
use crate::error::{DyckError, Result};

/// Multiplicity sequence, stored without trailing zeros so that `(3, 0, 0)`
/// and `(3)` compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultSeq {
    entries: Vec<u64>,
}

impl MultSeq {
    /// Builds a sequence from `a_1, a_2, ...`.
    pub fn new(entries: impl Into<Vec<u64>>) -> Self {
        let mut entries = entries.into();
        while entries.last() == Some(&0) {
            entries.pop();
        }
        MultSeq { entries }
    }

    /// Multiplicity sequence of a multiset of positive parts.
    pub fn from_parts(parts: &[u64]) -> Self {
        let mut entries = Vec::new();
        for &part in parts {
            assert!(part >= 1, "parts must be positive");
            let idx = part as usize - 1;
            if entries.len() <= idx {
                entries.resize(idx + 1, 0);
            }
            entries[idx] += 1;
        }
        MultSeq::new(entries)
    }

    /// `a_i` for `i >= 1`; zero past the stored support.
    pub fn get(&self, i: usize) -> u64 {
        assert!(i >= 1, "multiplicity sequences are indexed from 1");
        self.entries.get(i - 1).copied().unwrap_or(0)
    }

    /// Stored entries `a_1 ..= a_k` with no trailing zero.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `(part, multiplicity)` pairs for the nonzero entries, smallest part first.
    pub fn part_multiplicities(&self) -> Vec<(u64, u64)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| (i as u64 + 1, a))
            .collect()
    }

    /// `‖a‖ = Σ i·a_i`.
    pub fn norm(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u64 + 1) * a)
            .sum()
    }

    /// `|a| = Σ a_i`.
    pub fn size(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// `ℓ(a)`, the number of nonzero entries.
    pub fn support_len(&self) -> usize {
        self.entries.iter().filter(|&&a| a != 0).count()
    }

    /// The multinomial `|a|! / Π a_i!`: the number of distinct orderings of
    /// the parts.
    pub fn h(&self) -> BigNat {
        let mut total = 0u64;
        let mut acc = BigNat::one();
        for &a in &self.entries {
            total += a;
            acc *= binomial(total, a as i64);
        }
        acc
    }

    /// Componentwise `self <= other`.
    pub fn is_dominated_by(&self, other: &MultSeq) -> bool {
        self.entries.len() <= other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|(a, c)| a <= c)
    }

    /// `self - other`, defined when `other <= self`.
    pub fn checked_sub(&self, other: &MultSeq) -> Option<MultSeq> {
        if !other.is_dominated_by(self) {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &c)| c - other.entries.get(i).copied().unwrap_or(0))
            .collect::<Vec<_>>();
        Some(MultSeq::new(entries))
    }

    /// `‖a‖ / |a|` as an exact rational. Requires `|a| > 0`.
    fn norm_over_size(&self) -> BigRat {
        BigRat::new(BigInt::from(self.norm()), BigInt::from(self.size()))
    }
}

impl fmt::Display for MultSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Every `a` with `‖a‖ = d`, one per integer partition of `d`.
///
/// Order is lexicographically decreasing in `(a_1, a_2, ...)`, so for `d = 3`
/// the sequence is `(3)`, `(1,1)`, `(0,0,1)`.
pub fn sequences_with_norm(d: u64) -> impl Iterator<Item = MultSeq> {
    fn fill(i: u64, remaining: u64, cur: &mut Vec<u64>, out: &mut Vec<MultSeq>) {
        if remaining == 0 {
            out.push(MultSeq::new(cur.clone()));
            return;
        }
        if i > remaining {
            return;
        }
        for a in (0..=remaining / i).rev() {
            cur.push(a);
            fill(i + 1, remaining - a * i, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    fill(1, d, &mut Vec::new(), &mut out);
    out.into_iter()
}

/// `B_c^j`: all `a <= c` with `|a| = |c| - j`.
pub fn below_set(c: &MultSeq, j: u64) -> Result<impl Iterator<Item = MultSeq>> {
    let size = c.size();
    if j >= size {
        return Err(DyckError::OutOfRange {
            index: j,
            reason: format!("j must be below |c| = {size}"),
        });
    }

    // `rest` is the capacity of the entries after position `i`.
    fn fill(c: &[u64], i: usize, need: u64, rest: u64, cur: &mut Vec<u64>, out: &mut Vec<MultSeq>) {
        if i == c.len() {
            if need == 0 {
                out.push(MultSeq::new(cur.clone()));
            }
            return;
        }
        let rest = rest - c[i];
        let lo = need.saturating_sub(rest);
        let hi = need.min(c[i]);
        for a in lo..=hi {
            cur.push(a);
            fill(c, i + 1, need - a, rest, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    fill(c.entries(), 0, size - j, size, &mut Vec::new(), &mut out);
    Ok(out.into_iter())
}

/// Checks `Σ_{a ∈ B_c^j} (‖a‖/|a|)·h(a)·h(c−a) = (‖c‖/|c|)·h(c)` exactly.
pub fn check_hh_identity(c: &MultSeq, j: u64) -> Result<bool> {
    if c.size() == 0 {
        return Err(DyckError::OutOfRange {
            index: 0,
            reason: "c must have at least one part".into(),
        });
    }
    let mut lhs = BigRat::zero();
    for a in below_set(c, j)? {
        let rest = c.checked_sub(&a).expect("below_set yields a <= c");
        lhs += a.norm_over_size() * nat_to_rat(&(a.h() * rest.h()));
    }
    let rhs = c.norm_over_size() * nat_to_rat(&c.h());
    Ok(lhs == rhs)
}

/// `Π_i x_i^{a_i} / a_i!`, with `xs[0]` playing `x_1`.
pub(crate) fn weighted_term(a: &MultSeq, xs: &[BigRat]) -> BigRat {
    let mut term = BigRat::one();
    for (idx, &ai) in a.entries().iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let power: BigRat = Pow::pow(&xs[idx], ai as u32);
        term *= power / nat_to_rat(&factorial(ai));
    }
    term
}

/// `Σ_{‖a‖ = k} Π x_i^{a_i}/a_i!`; equals 1 for `k = 0`.
pub(crate) fn exponential_partition_sum(k: u64, xs: &[BigRat]) -> BigRat {
    if k == 0 {
        return BigRat::one();
    }
    sequences_with_norm(k).map(|a| weighted_term(&a, xs)).sum()
}

/// Evaluates both sides of the polynomial identity
/// `Σ_{i=1}^d (i/d)·x_i·S(d−i) = S(d)`, `S(k) = Σ_{‖a‖=k} Π x_j^{a_j}/a_j!`,
/// at the point `xs = (x_1, ..., x_d)` and compares them exactly.
pub fn check_coef_identity(d: u64, xs: &[BigRat]) -> Result<bool> {
    if d == 0 {
        return Err(DyckError::NotPositive { name: "d" });
    }
    if xs.len() as u64 != d {
        return Err(DyckError::Arity {
            expected: d as usize,
            got: xs.len(),
        });
    }
    let (lhs, rhs) = coef_identity_sides(d, xs);
    Ok(lhs == rhs)
}

fn coef_identity_sides(d: u64, xs: &[BigRat]) -> (BigRat, BigRat) {
    let dd = BigInt::from(d);
    let lhs = (1..=d)
        .map(|i| {
            BigRat::new(BigInt::from(i), dd.clone())
                * &xs[i as usize - 1]
                * exponential_partition_sum(d - i, xs)
        })
        .sum();
    (lhs, exponential_partition_sum(d, xs))
}
