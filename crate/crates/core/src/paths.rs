//! Lattice paths as words over `{x, y}`.
//!
//! `x` is an east step and `y` a north step. A word with `m` x's and `n` y's
//! is a path from `(0, 0)` to `(m, n)`; it is a Dyck path when every prefix
//! has non-negative [`height`], i.e. the path never crosses above the line
//! `y = (n/m)·x`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{gcd, BigNat};
use crate::error::{DyckError, Result};
use crate::partitions::MultSeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    X,
    Y,
}

impl Step {
    fn as_char(self) -> char {
        match self {
            Step::X => 'x',
            Step::Y => 'y',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    steps: Vec<Step>,
    m: u64,
    n: u64,
}

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(DyckError::EmptyPath);
        }
        let m = steps.iter().filter(|&&s| s == Step::X).count() as u64;
        let n = steps.len() as u64 - m;
        Ok(PathWord { steps, m, n })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of x steps.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of y steps.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights of the prefixes of length `0..=len`, measured against this
    /// word's own endpoint.
    fn prefix_heights(&self) -> Vec<i128> {
        let (up, down) = (self.n as i128, self.m as i128);
        let mut heights = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0i128;
        heights.push(h);
        for step in &self.steps {
            h += match step {
                Step::X => up,
                Step::Y => -down,
            };
            heights.push(h);
        }
        heights
    }

    pub fn is_dyck(&self) -> bool {
        self.prefix_heights().iter().all(|&h| h >= 0)
    }

    /// The cyclic shift `u_{s+1} ... u_{m+n} u_1 ... u_s`, `s` taken mod `m + n`.
    pub fn rotate(&self, s: i64) -> PathWord {
        let shift = s.rem_euclid(self.steps.len() as i64) as usize;
        let mut steps = self.steps.clone();
        steps.rotate_left(shift);
        PathWord {
            steps,
            m: self.m,
            n: self.n,
        }
    }

    /// Smallest `r >= 1` with `rotate(r) == self`.
    pub fn period(&self) -> u64 {
        let len = self.steps.len();
        (1..=len)
            .filter(|r| len % r == 0)
            .find(|&r| (r..len).all(|i| self.steps[i] == self.steps[i - r]))
            .unwrap_or(len) as u64
    }

    /// All cyclic shifts of the word.
    pub fn rotation_class(&self) -> BTreeSet<PathWord> {
        (1..=self.steps.len() as i64).map(|s| self.rotate(s)).collect()
    }

    /// Rotation that starts at the first lowest point of the word.
    ///
    /// The result is always a Dyck path. Rotating at the global minimum of the
    /// prefix heights makes every prefix of the shifted word non-negative;
    /// ties go to the smallest prefix length, so a Dyck word maps to itself.
    pub fn canonical_dyck(&self) -> PathWord {
        let heights = self.prefix_heights();
        let len = self.steps.len();
        let (k, _) = heights[..len]
            .iter()
            .enumerate()
            .min_by_key(|&(i, &h)| (h, i))
            .expect("non-empty word");
        self.rotate(k as i64)
    }

    /// Block lengths between consecutive touches of the diagonal, in units of
    /// one primitive step `(p, q)`.
    pub fn shape(&self) -> Result<Shape> {
        let heights = self.prefix_heights();
        if heights.iter().any(|&h| h < 0) {
            return Err(DyckError::NotDyck(self.to_string()));
        }
        let d = gcd(self.m, self.n);
        let block = self.steps.len() / d as usize;
        let mut parts = Vec::new();
        let mut last = 0usize;
        for (i, &h) in heights.iter().enumerate().skip(1) {
            if h == 0 {
                debug_assert_eq!(i % block, 0);
                let k = i / block;
                parts.push((k - last) as u64);
                last = k;
            }
        }
        Ok(Shape { parts })
    }

    /// Multiplicity sequence of [`PathWord::shape`].
    pub fn type_of(&self) -> Result<MultSeq> {
        Ok(self.shape()?.path_type())
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'x' | 'X' => Ok(Step::X),
                'y' | 'Y' => Ok(Step::Y),
                other => Err(DyckError::InvalidStep(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        PathWord::new(steps)
    }
}

/// `n·(#x in prefix) − m·(#y in prefix)`: the signed distance below the
/// diagonal to `(m, n)`, scaled to an integer.
pub fn height(m: u64, n: u64, prefix: &[Step]) -> i128 {
    prefix.iter().fold(0i128, |h, step| match step {
        Step::X => h + n as i128,
        Step::Y => h - m as i128,
    })
}

/// Composition of `gcd(m, n)` recording the diagonal-return blocks of a
/// Dyck path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    parts: Vec<u64>,
}

impl Shape {
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn path_type(&self) -> MultSeq {
        MultSeq::from_parts(&self.parts)
    }
}

/// Guard on exhaustive enumeration, counted in total steps `m + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimit(pub u64);

impl EnumLimit {
    pub const DEFAULT: EnumLimit = EnumLimit(24);
    pub const ENV_VAR: &'static str = "DYCK_ENUM_LIMIT";

    /// Reads `DYCK_ENUM_LIMIT`, falling back to the default when it is unset
    /// or not a number.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(EnumLimit)
            .unwrap_or_default()
    }

    pub fn check(self, m: u64, n: u64) -> Result<()> {
        if m + n > self.0 {
            return Err(DyckError::EnumerationLimit {
                steps: m + n,
                limit: self.0,
            });
        }
        Ok(())
    }
}

impl Default for EnumLimit {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// All words with `m` x's and `n` y's in lexicographic order (`x < y`).
pub fn enumerate_paths(m: u64, n: u64, limit: EnumLimit) -> Result<PathIter> {
    if m + n == 0 {
        return Err(DyckError::EmptyPath);
    }
    limit.check(m, n)?;
    let mut steps = vec![Step::X; m as usize];
    steps.resize((m + n) as usize, Step::Y);
    Ok(PathIter {
        next: Some(steps),
        m,
        n,
    })
}

/// Iterator returned by [`enumerate_paths`].
#[derive(Debug, Clone)]
pub struct PathIter {
    next: Option<Vec<Step>>,
    m: u64,
    n: u64,
}

impl Iterator for PathIter {
    type Item = PathWord;

    fn next(&mut self) -> Option<PathWord> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(PathWord {
            steps: current,
            m: self.m,
            n: self.n,
        })
    }
}

fn next_permutation(v: &mut [Step]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Counts monotone paths from `(0, 0)` to `(m, n)` through admissible points
/// with a dynamic program over the grid.
///
/// A point `(x, y)` is admissible when `n·x − m·y >= 0`. In strict mode the
/// inequality must be strict everywhere except at the two endpoints, which
/// counts the primitive paths that touch the diagonal only at its ends.
pub fn count_dp(m: u64, n: u64, strict: bool) -> BigNat {
    let (mi, ni) = (m as i128, n as i128);
    let admissible = |x: u64, y: u64| {
        let h = ni * x as i128 - mi * y as i128;
        if strict {
            h > 0 || (x == 0 && y == 0) || (x == m && y == n)
        } else {
            h >= 0
        }
    };
    // column[y] holds the number of paths to (x, y) for the current x.
    let mut column: Vec<BigNat> = vec![BigNat::zero(); n as usize + 1];
    for x in 0..=m {
        for y in 0..=n {
            let yi = y as usize;
            if !admissible(x, y) {
                column[yi] = BigNat::zero();
                continue;
            }
            if x == 0 && y == 0 {
                column[0] = BigNat::one();
                continue;
            }
            // column[yi] still holds the count for (x - 1, y).
            if y > 0 {
                let below = column[yi - 1].clone();
                column[yi] += below;
            }
        }
    }
    column[n as usize].clone()
}

/// `[D(p,q), D(2p,2q), ..., D(dmax·p, dmax·q)]`, the primitive counts,
/// computed by the strict grid DP and cross-checked against the first-return
/// decomposition `C̃_d = Σ_{i=1}^{d} D_i·C̃_{d−i}`.
pub fn primitive_counts(p: u64, q: u64, dmax: u64) -> Result<Vec<BigNat>> {
    if p == 0 || q == 0 {
        return Err(DyckError::NotPositive {
            name: if p == 0 { "p" } else { "q" },
        });
    }
    if dmax == 0 {
        return Err(DyckError::NotPositive { name: "dmax" });
    }
    let g = gcd(p, q);
    if g != 1 {
        return Err(DyckError::NotCoprime { m: p, n: q, gcd: g });
    }

    let strict: Vec<BigNat> = (1..=dmax).map(|d| count_dp(d * p, d * q, true)).collect();

    // tilde[k] = C(kp, kq), tilde[0] = 1.
    let tilde: Vec<BigInt> = (0..=dmax)
        .map(|k| {
            if k == 0 {
                BigInt::one()
            } else {
                BigInt::from(count_dp(k * p, k * q, false))
            }
        })
        .collect();
    let mut first_return: Vec<BigInt> = Vec::with_capacity(dmax as usize);
    for d in 1..=dmax as usize {
        let mut value = tilde[d].clone();
        for i in 1..d {
            value -= &first_return[i - 1] * &tilde[d - i];
        }
        first_return.push(value);
    }

    for (idx, (a, b)) in strict.iter().zip(&first_return).enumerate() {
        if BigInt::from(a.clone()) != *b {
            return Err(DyckError::Mismatch {
                what: format!("D({}, {})", (idx as u64 + 1) * p, (idx as u64 + 1) * q),
                left: a.to_string(),
                right: b.to_string(),
            });
        }
    }
    Ok(strict)
}

/// Number of Dyck paths `E(a, r)` with a given type and period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub path_type: MultSeq,
    pub period: u64,
    pub count: BigNat,
}

/// Groups all Dyck paths to `(m, n)` by `(type, period)`.
///
/// Records are ordered by type and then period; absent combinations have no
/// record.
pub fn census(m: u64, n: u64, limit: EnumLimit) -> Result<Vec<CensusRecord>> {
    if m == 0 || n == 0 {
        return Err(DyckError::NotPositive {
            name: if m == 0 { "m" } else { "n" },
        });
    }
    let mut counts: BTreeMap<(MultSeq, u64), BigNat> = BTreeMap::new();
    for path in enumerate_paths(m, n, limit)? {
        if !path.is_dyck() {
            continue;
        }
        let key = (path.type_of()?, path.period());
        *counts.entry(key).or_default() += 1u32;
    }
    Ok(counts
        .into_iter()
        .map(|((path_type, period), count)| CensusRecord {
            path_type,
            period,
            count,
        })
        .collect())
}
