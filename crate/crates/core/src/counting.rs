//! Closed forms and recurrences for `C(m, n)`.
//!
//! Every method works in exact rationals and converts to a [`BigNat`] only
//! after checking the value is integral. A non-integral result can only come
//! from a bug, so it is reported as [`DyckError::NonIntegral`] rather than
//! rounded.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{a_value, binomial, expect_nat, gcd, nat_to_rat, BigNat, BigRat};
use crate::error::{DyckError, Result};
use crate::partitions::{sequences_with_norm, weighted_term, MultSeq};
use crate::paths::count_dp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    Coprime,
    Main,
    Recurrence,
    Fuss,
    Duchon,
    Oracle,
}

impl CountMethod {
    pub const ALL: [CountMethod; 6] = [
        CountMethod::Coprime,
        CountMethod::Main,
        CountMethod::Recurrence,
        CountMethod::Fuss,
        CountMethod::Duchon,
        CountMethod::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountMethod::Coprime => "coprime",
            CountMethod::Main => "main",
            CountMethod::Recurrence => "recurrence",
            CountMethod::Fuss => "fuss",
            CountMethod::Duchon => "duchon",
            CountMethod::Oracle => "oracle",
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CountMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigNat,
    pub method: CountMethod,
    /// Per-sequence terms of the partition sum; only the main formula has them.
    pub terms: Option<Vec<(MultSeq, BigRat)>>,
}

impl CountResult {
    fn plain(value: BigNat, method: CountMethod) -> Self {
        CountResult {
            value,
            method,
            terms: None,
        }
    }
}

fn require_positive(m: u64, n: u64) -> Result<()> {
    if m == 0 {
        return Err(DyckError::NotPositive { name: "m" });
    }
    if n == 0 {
        return Err(DyckError::NotPositive { name: "n" });
    }
    Ok(())
}

/// `C(m, n) = binom(m + n, n) / (m + n)` for coprime `m, n`.
pub fn count_coprime(m: u64, n: u64) -> Result<BigNat> {
    require_positive(m, n)?;
    let g = gcd(m, n);
    if g != 1 {
        return Err(DyckError::NotCoprime { m, n, gcd: g });
    }
    expect_nat(&a_value(m, n)?, format!("A({m}, {n})"))
}

/// The partition-sum formula
/// `C(m, n) = Σ_{‖a‖=d} Π_i A(ip, iq)^{a_i} / a_i!` with `d = gcd(m, n)`,
/// `(p, q) = (m/d, n/d)`.
///
/// The terms are returned in [`sequences_with_norm`] order. Individual terms
/// are generally fractions; only the total is integral.
pub fn count_main(m: u64, n: u64) -> Result<CountResult> {
    require_positive(m, n)?;
    let d = gcd(m, n);
    let (p, q) = (m / d, n / d);
    let a_values = (1..=d)
        .map(|i| a_value(i * p, i * q))
        .collect::<Result<Vec<_>>>()?;

    let terms: Vec<(MultSeq, BigRat)> = sequences_with_norm(d)
        .map(|a| {
            let term = weighted_term(&a, &a_values);
            (a, term)
        })
        .collect();
    let total: BigRat = terms.iter().map(|(_, t)| t).sum();
    let value = expect_nat(&total, format!("partition sum for C({m}, {n})"))?;
    Ok(CountResult {
        value,
        method: CountMethod::Main,
        terms: Some(terms),
    })
}

/// Bottom-up `C̃_k = Σ_{i=1}^{k} (i/k)·A_i·C̃_{k−i}`, with `C̃_0 = 1`,
/// `A_i = A(ip, iq)`.
pub fn count_recurrence(m: u64, n: u64) -> Result<BigNat> {
    require_positive(m, n)?;
    let d = gcd(m, n);
    let (p, q) = (m / d, n / d);
    let a_values = (1..=d)
        .map(|i| a_value(i * p, i * q))
        .collect::<Result<Vec<_>>>()?;

    let mut tilde: Vec<BigRat> = vec![BigRat::one()];
    for k in 1..=d {
        let kk = BigInt::from(k);
        let next: BigRat = (1..=k)
            .map(|i| {
                BigRat::new(BigInt::from(i), kk.clone())
                    * &a_values[i as usize - 1]
                    * &tilde[(k - i) as usize]
            })
            .sum();
        expect_nat(&next, format!("C({}, {})", k * p, k * q))?;
        tilde.push(next);
    }
    expect_nat(&tilde[d as usize], format!("C({m}, {n})"))
}

/// `binom((k+1)n, n) / (kn + 1)`, defined for every `n >= 0`.
fn fuss_value(k: u64, n: u64) -> Result<BigNat> {
    let value = BigRat::new(
        BigInt::from(binomial((k + 1) * n, n as i64)),
        BigInt::from(k * n + 1),
    );
    expect_nat(&value, format!("C({}, {n})", k * n))
}

/// Fuss–Catalan number `C(kn, n) = binom((k+1)n, n) / (kn + 1)`.
pub fn count_fuss(k: u64, n: u64) -> Result<BigNat> {
    if k == 0 {
        return Err(DyckError::NotPositive { name: "k" });
    }
    if n == 0 {
        return Err(DyckError::NotPositive { name: "n" });
    }
    fuss_value(k, n)
}

/// The six-term sum for `C(2l, 3l)`:
/// `Σ_{i=0}^{5} binom(5l+1, l−i)·binom(5l+2i, i) / (5l+i+1)`.
pub(crate) fn duchon_sum(l: u64) -> Result<BigNat> {
    let total: BigRat = (0..=5u64)
        .map(|i| {
            let numer = binomial(5 * l + 1, l as i64 - i as i64) * binomial(5 * l + 2 * i, i as i64);
            BigRat::new(BigInt::from(numer), BigInt::from(5 * l + i + 1))
        })
        .sum();
    expect_nat(&total, format!("six-term sum for C({}, {})", 2 * l, 3 * l))
}

/// `C(2l, 3l)` from the six-term sum, confirmed against [`count_main`].
pub fn count_duchon(l: u64) -> Result<BigNat> {
    if l == 0 {
        return Err(DyckError::NotPositive { name: "l" });
    }
    let value = duchon_sum(l)?;
    let main = count_main(2 * l, 3 * l)?.value;
    if value != main {
        return Err(DyckError::Mismatch {
            what: format!("six-term sum vs partition sum at l = {l}"),
            left: value.to_string(),
            right: main.to_string(),
        });
    }
    Ok(value)
}

/// `[C_0, ..., C_nmax]` from `C_0 = 1`, `C_n = Σ_{i<n} C_i·C_{n−1−i}`.
pub fn catalan_sequence(nmax: u64) -> Vec<BigNat> {
    let mut seq: Vec<BigNat> = vec![BigNat::one()];
    for n in 1..=nmax as usize {
        let next = (0..n).map(|i| &seq[i] * &seq[n - 1 - i]).sum();
        seq.push(next);
    }
    seq
}

/// Checks that the `i`-th and `(n−i+1)`-th terms of the diagonal recurrence
/// add up to `2·C_{n−i}·C_{i−1}`.
pub fn check_catalan_reduction(n: u64, i: u64) -> Result<bool> {
    if i == 0 || i > n {
        return Err(DyckError::OutOfRange {
            index: i,
            reason: format!("need 1 <= i <= n = {n}"),
        });
    }
    let catalan = catalan_sequence(n);
    let c = |k: u64| nat_to_rat(&catalan[k as usize]);
    let nn = BigInt::from(n);
    let j = n - i + 1;
    let lhs = BigRat::new(BigInt::from(i), nn.clone()) * a_value(i, i)? * c(n - i)
        + BigRat::new(BigInt::from(j), nn) * a_value(j, j)? * c(i - 1);
    let rhs = BigRat::from_integer(BigInt::from(2)) * c(n - i) * c(i - 1);
    Ok(lhs == rhs)
}

/// Checks `C(kn, n) = Σ Π_{i=1}^{k+1} C(k·n_i, n_i)` over all `(k+1)`-tuples of
/// non-negative `n_i` summing to `n − 1`.
pub fn check_fuss_recurrence(k: u64, n: u64) -> Result<bool> {
    let expected = count_fuss(k, n)?;
    let table = (0..n).map(|j| fuss_value(k, j)).collect::<Result<Vec<_>>>()?;

    // Compositions of `remaining` into `slots` non-negative parts.
    fn sum_products(table: &[BigNat], slots: u64, remaining: u64) -> BigNat {
        if slots == 1 {
            return table[remaining as usize].clone();
        }
        (0..=remaining)
            .map(|first| &table[first as usize] * sum_products(table, slots - 1, remaining - first))
            .sum()
    }

    Ok(sum_products(&table, k + 1, n - 1) == expected)
}

/// Dispatches to one counting method, rejecting shapes that do not fit it.
pub fn count(m: u64, n: u64, method: CountMethod) -> Result<CountResult> {
    require_positive(m, n)?;
    let not_applicable = |reason| DyckError::MethodNotApplicable {
        m,
        n,
        method: method.name(),
        reason,
    };
    let value = match method {
        CountMethod::Main => return count_main(m, n),
        CountMethod::Recurrence => count_recurrence(m, n)?,
        CountMethod::Oracle => count_dp(m, n, false),
        CountMethod::Coprime => {
            if gcd(m, n) != 1 {
                return Err(not_applicable("m and n must be coprime"));
            }
            count_coprime(m, n)?
        }
        CountMethod::Fuss => {
            if m % n != 0 {
                return Err(not_applicable("m must be a multiple of n"));
            }
            count_fuss(m / n, n)?
        }
        CountMethod::Duchon => {
            if m % 2 != 0 || 3 * m != 2 * n {
                return Err(not_applicable("(m, n) must equal (2l, 3l)"));
            }
            count_duchon(m / 2)?
        }
    };
    Ok(CountResult::plain(value, method))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use num_traits::Zero;

    fn nat(v: u64) -> BigNat {
        BigNat::from(v)
    }

    #[test]
    fn coprime_examples() {
        assert_eq!(count_coprime(5, 3).unwrap(), nat(7));
        assert_eq!(count_coprime(5, 3).unwrap(), count_dp(5, 3, false));
        assert_eq!(count_coprime(1, 1).unwrap(), nat(1));
        assert_eq!(count_coprime(2, 3).unwrap(), nat(2));
        assert_eq!(count_coprime(2, 3).unwrap(), count_dp(2, 3, false));
        assert_eq!(
            count_coprime(4, 6),
            Err(DyckError::NotCoprime { m: 4, n: 6, gcd: 2 })
        );
    }

    #[test]
    fn main_example_three_three() {
        let result = count_main(3, 3).unwrap();
        assert_eq!(result.value, nat(5));
        let terms = result.terms.unwrap();
        let values: Vec<_> = terms.iter().map(|(_, t)| t.clone()).collect();
        assert_eq!(values, vec![rat(1, 6), rat(3, 2), rat(20, 6)]);
        assert_eq!(terms[0].0, MultSeq::new(vec![3]));
    }

    #[test]
    fn main_examples() {
        assert_eq!(count_main(4, 6).unwrap().value, nat(23));
        assert_eq!(count_main(4, 6).unwrap().value, count_dp(4, 6, false));
        for (m, n) in [(5, 3), (7, 2), (1, 9), (11, 13)] {
            assert_eq!(count_main(m, n).unwrap().value, count_coprime(m, n).unwrap());
        }
        assert!(count_main(0, 3).is_err());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(count_recurrence(3, 3).unwrap(), nat(5));
        assert_eq!(count_recurrence(2, 2).unwrap(), nat(2));
        assert_eq!(count_recurrence(7, 4).unwrap(), count_coprime(7, 4).unwrap());
    }

    #[test]
    fn fuss_examples() {
        assert_eq!(count_fuss(1, 3).unwrap(), nat(5));
        assert_eq!(count_fuss(2, 2).unwrap(), nat(3));
        assert_eq!(count_fuss(2, 2).unwrap(), count_dp(4, 2, false));
        for k in 1..=6 {
            assert_eq!(count_fuss(k, 1).unwrap(), nat(1));
        }
        assert!(count_fuss(0, 2).is_err());
    }

    #[test]
    fn duchon_examples() {
        assert_eq!(count_duchon(1).unwrap(), nat(2));
        assert_eq!(count_duchon(1).unwrap(), count_dp(2, 3, false));
        assert_eq!(count_duchon(2).unwrap(), nat(23));
        assert_eq!(count_duchon(3).unwrap(), count_dp(6, 9, false));
        assert!(count_duchon(0).is_err());
    }

    #[test]
    fn duchon_terms_at_two() {
        // 55/11 + 11·12/12 + 91/13
        let terms: Vec<BigRat> = (0..=5u64)
            .map(|i| {
                let numer = binomial(11, 2 - i as i64) * binomial(10 + 2 * i, i as i64);
                BigRat::new(BigInt::from(numer), BigInt::from(11 + i))
            })
            .collect();
        assert_eq!(terms[..3], [rat(5, 1), rat(11, 1), rat(7, 1)]);
        assert!(terms[3..].iter().all(|t| t.is_zero()));
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan_sequence(3), vec![nat(1), nat(1), nat(2), nat(5)]);
        assert_eq!(catalan_sequence(0), vec![nat(1)]);
        assert_eq!(catalan_sequence(5).last(), Some(&nat(42)));
        assert_eq!(count_dp(5, 5, false), nat(42));
    }

    #[test]
    fn catalan_reduction_examples() {
        assert!(check_catalan_reduction(3, 1).unwrap());
        assert!(check_catalan_reduction(1, 1).unwrap());
        assert!(check_catalan_reduction(10, 4).unwrap());
        assert!(check_catalan_reduction(3, 0).is_err());
        assert!(check_catalan_reduction(3, 4).is_err());
    }

    #[test]
    fn fuss_recurrence_examples() {
        assert!(check_fuss_recurrence(1, 4).unwrap());
        assert!(check_fuss_recurrence(2, 1).unwrap());
        assert!(check_fuss_recurrence(2, 3).unwrap());
        assert_eq!(count_dp(6, 3, false), nat(12));
        assert_eq!(count_fuss(2, 3).unwrap(), nat(12));
    }

    #[test]
    fn dispatch_rejects_inapplicable_shapes() {
        assert_eq!(count(5, 3, CountMethod::Coprime).unwrap().value, nat(7));
        assert_eq!(count(4, 6, CountMethod::Duchon).unwrap().value, nat(23));
        assert_eq!(count(6, 3, CountMethod::Fuss).unwrap().value, nat(12));
        assert_eq!(count(3, 3, CountMethod::Oracle).unwrap().value, nat(5));
        for (m, n, method) in [
            (4, 4, CountMethod::Coprime),
            (3, 6, CountMethod::Fuss),
            (3, 2, CountMethod::Duchon),
            (4, 5, CountMethod::Duchon),
        ] {
            assert!(matches!(
                count(m, n, method),
                Err(DyckError::MethodNotApplicable { .. })
            ));
        }
    }

    #[test]
    fn method_names_round_trip() {
        for method in CountMethod::ALL {
            assert_eq!(method.name().parse::<CountMethod>().unwrap(), method);
        }
        assert!("auto".parse::<CountMethod>().is_err());
    }
}
