//! Named identity suites.
//!
//! Each suite walks a bounded range of inputs and reports one
//! [`CheckOutcome`] per group of related checks. A suite never stops at the
//! first failure; callers decide what to do with the report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{a_value, binomial, gcd, nat_to_rat, BigNat, BigRat};
use crate::counting::{
    catalan_sequence, check_catalan_reduction, check_fuss_recurrence, count_coprime, count_duchon,
    count_fuss, count_main, count_recurrence,
};
use crate::error::Result;
use crate::partitions::{below_set, check_hh_identity, sequences_with_norm, MultSeq};
use crate::paths::{census, count_dp, enumerate_paths, primitive_counts, EnumLimit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    CycleLemma,
    Hh,
    Chad,
    Ahad,
    Duchon,
    Catalan,
    Fuss,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::CycleLemma,
        Suite::Hh,
        Suite::Chad,
        Suite::Ahad,
        Suite::Duchon,
        Suite::Catalan,
        Suite::Fuss,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CycleLemma => "cycle-lemma",
            Suite::Hh => "hh",
            Suite::Chad => "chad",
            Suite::Ahad => "ahad",
            Suite::Duchon => "duchon",
            Suite::Catalan => "catalan",
            Suite::Fuss => "fuss",
            Suite::Oracle => "oracle",
        }
    }

    /// Meaning of the limit per suite:
    ///
    /// - cycle-lemma: max `m + n`
    /// - hh: number of support positions (entries are capped at 3)
    /// - chad, ahad: max `d·(p + q)`
    /// - duchon: max `l`
    /// - catalan: max `n`
    /// - fuss: max `n` (values for `k <= 4`, recurrence for `k <= 3`)
    /// - oracle: max `m` and `n`
    pub fn default_limit(self) -> u64 {
        match self {
            Suite::CycleLemma => 14,
            Suite::Hh => 4,
            Suite::Chad | Suite::Ahad => 14,
            Suite::Duchon => 5,
            Suite::Catalan => 30,
            Suite::Fuss => 5,
            Suite::Oracle => 12,
        }
    }

    pub fn run(self, limit: Option<u64>) -> Vec<CheckOutcome> {
        let limit = limit.unwrap_or_else(|| self.default_limit());
        match self {
            Suite::CycleLemma => cycle_lemma(limit),
            Suite::Hh => hh(limit),
            Suite::Chad => chad(limit),
            Suite::Ahad => ahad(limit),
            Suite::Duchon => duchon(limit),
            Suite::Catalan => catalan(limit),
            Suite::Fuss => fuss(limit),
            Suite::Oracle => oracle(limit),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}: {}", self.suite, self.label, self.detail)
    }
}

/// Accumulates the failures of one group of checks.
struct Group {
    suite: Suite,
    label: String,
    cases: u64,
    failures: Vec<String>,
}

impl Group {
    fn new(suite: Suite, label: impl Into<String>) -> Self {
        Group {
            suite,
            label: label.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn check_result(&mut self, res: Result<bool>, what: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.check(ok, what),
            Err(err) => {
                self.cases += 1;
                self.failures.push(format!("{}: {err}", what()));
            }
        }
    }

    fn finish(self) -> CheckOutcome {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{} cases", self.cases)
        } else {
            let shown = self.failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ");
            format!("{} of {} cases failed: {shown}", self.failures.len(), self.cases)
        };
        CheckOutcome {
            suite: self.suite,
            label: self.label,
            passed,
            detail,
        }
    }
}

fn cycle_lemma(limit: u64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for total in 2..=limit {
        for m in 1..total {
            let n = total - m;
            let mut group = Group::new(Suite::CycleLemma, format!("({m}, {n})"));
            let g = gcd(m, n);
            let words = match enumerate_paths(m, n, EnumLimit(limit)) {
                Ok(words) => words,
                Err(err) => {
                    group.check(false, || err.to_string());
                    out.push(group.finish());
                    continue;
                }
            };
            for word in words {
                let class = word.rotation_class();
                let period = word.period();
                let dyck_in_class = class.iter().filter(|p| p.is_dyck()).count();
                let canonical = word.canonical_dyck();
                group.check(class.len() as u64 == period, || format!("|[{word}]| != per"));
                group.check(g % (total / period) == 0 && total % period == 0, || {
                    format!("per({word}) = {period} is not (m+n)/q with q | gcd")
                });
                group.check(dyck_in_class >= 1, || format!("[{word}] has no Dyck path"));
                if g == 1 {
                    group.check(period == total, || format!("per({word}) = {period} < m + n"));
                    group.check(dyck_in_class == 1, || {
                        format!("[{word}] has {dyck_in_class} Dyck paths")
                    });
                }
                group.check(canonical.is_dyck() && class.contains(&canonical), || {
                    format!("canonical form of {word} is {canonical}")
                });
            }
            if g == 1 {
                let lhs = binomial(total, n as i64);
                let rhs = count_dp(m, n, false) * total;
                group.check(lhs == rhs, || "binom(m+n, n) != (m+n)·C(m, n)".into());
            }
            out.push(group.finish());
        }
    }
    out
}

/// Nonzero sequences with support in `1..=positions` and entries `<= max`,
/// grouped by norm.
fn small_sequences(positions: u64, max: u64) -> BTreeMap<u64, Vec<MultSeq>> {
    let mut by_norm: BTreeMap<u64, Vec<MultSeq>> = BTreeMap::new();
    let base = max + 1;
    for code in 1..base.pow(positions as u32) {
        let mut rest = code;
        let entries = (0..positions)
            .map(|_| {
                let e = rest % base;
                rest /= base;
                e
            })
            .collect::<Vec<_>>();
        let c = MultSeq::new(entries);
        by_norm.entry(c.norm()).or_default().push(c);
    }
    by_norm
}

fn hh(limit: u64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for (norm, cs) in small_sequences(limit, 3) {
        let mut group = Group::new(Suite::Hh, format!("‖c‖ = {norm}"));
        for c in &cs {
            for j in 0..c.size() {
                group.check_result(check_hh_identity(c, j), || format!("c = {c}, j = {j}"));
            }
            if c.size() >= 2 {
                let res = below_set(c, 1).map(|set| set.map(|a| a.h()).sum::<BigNat>() == c.h());
                group.check_result(res, || format!("Σ h over B_c^1 != h(c) for c = {c}"));
            }
        }
        out.push(group.finish());
    }
    out
}

/// Coprime `(p, q, d)` with `d·(p + q) <= limit`.
fn primitive_triples(limit: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for p in 1..limit {
        for q in 1..limit {
            if gcd(p, q) != 1 {
                continue;
            }
            for d in 1..=limit / (p + q) {
                out.push((p, q, d));
            }
        }
    }
    out
}

/// `D^a = Π D(ip, iq)^{a_i}` with `primitive[i - 1] = D(ip, iq)`.
fn d_power(a: &MultSeq, primitive: &[BigNat]) -> BigNat {
    a.entries()
        .iter()
        .enumerate()
        .fold(BigNat::one(), |acc, (idx, &ai)| acc * primitive[idx].pow(ai as u32))
}

fn chad(limit: u64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for (p, q, d) in primitive_triples(limit) {
        let (m, n) = (d * p, d * q);
        let mut group = Group::new(Suite::Chad, format!("p={p} q={q} d={d}"));
        let result = (|| -> Result<()> {
            let primitive = primitive_counts(p, q, d)?;
            let records = census(m, n, EnumLimit(limit))?;
            let mut by_type: BTreeMap<MultSeq, BigNat> = BTreeMap::new();
            for rec in &records {
                *by_type.entry(rec.path_type.clone()).or_default() += &rec.count;
            }
            let mut formula_total = BigNat::zero();
            for a in sequences_with_norm(d) {
                let expected = a.h() * d_power(&a, &primitive);
                let got = by_type.remove(&a).unwrap_or_default();
                group.check(got == expected, || format!("type {a}: {got} paths, h·D^a = {expected}"));
                formula_total += expected;
            }
            group.check(by_type.is_empty(), || "census produced a type with ‖a‖ != d".into());
            let dp = count_dp(m, n, false);
            group.check(formula_total == dp, || format!("Σ h·D^a = {formula_total}, C = {dp}"));
            let main = count_main(m, n)?.value;
            group.check(main == dp, || format!("partition sum {main} != C = {dp}"));

            // Each Dyck path's class holds per·|type|/(m+n) Dyck paths.
            for path in enumerate_paths(m, n, EnumLimit(limit))?.filter(|p| p.is_dyck()) {
                let size = path.type_of()?.size();
                let dyck_in_class = path.rotation_class().iter().filter(|p| p.is_dyck()).count() as u64;
                group.check(dyck_in_class * (m + n) == path.period() * size, || {
                    format!("class of {path} has {dyck_in_class} Dyck paths")
                });
            }
            Ok(())
        })();
        if let Err(err) = result {
            group.check(false, || err.to_string());
        }
        out.push(group.finish());
    }
    out
}

fn ahad(limit: u64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for (p, q, d) in primitive_triples(limit) {
        let mut group = Group::new(Suite::Ahad, format!("p={p} q={q} d={d}"));
        let result = (|| -> Result<bool> {
            let primitive = primitive_counts(p, q, d)?;
            let rhs: BigRat = sequences_with_norm(d)
                .map(|a| {
                    nat_to_rat(&(a.h() * d_power(&a, &primitive)))
                        / BigRat::from_integer(BigInt::from(a.size()))
                })
                .sum();
            Ok(a_value(d * p, d * q)? == rhs)
        })();
        group.check_result(result, || format!("A_{d} != Σ h·D^a/|a|"));
        out.push(group.finish());
    }
    out
}

fn duchon(limit: u64) -> Vec<CheckOutcome> {
    (1..=limit)
        .map(|l| {
            let mut group = Group::new(Suite::Duchon, format!("l = {l}"));
            match count_duchon(l) {
                Ok(value) => {
                    let dp = count_dp(2 * l, 3 * l, false);
                    group.check(value == dp, || format!("six-term sum {value} != DP {dp}"));
                }
                Err(err) => group.check(false, || err.to_string()),
            }
            group.finish()
        })
        .collect()
}

fn catalan(limit: u64) -> Vec<CheckOutcome> {
    let mut reduction = Group::new(Suite::Catalan, "reduction");
    for n in 1..=limit {
        for i in 1..=n {
            reduction.check_result(check_catalan_reduction(n, i), || format!("n = {n}, i = {i}"));
        }
    }
    let mut sequence = Group::new(Suite::Catalan, "sequence");
    let seq = catalan_sequence(limit);
    for n in 1..=limit {
        let res = count_main(n, n).map(|r| r.value == seq[n as usize]);
        sequence.check_result(res, || format!("C_{n} != C({n}, {n})"));
    }
    vec![reduction.finish(), sequence.finish()]
}

fn fuss(limit: u64) -> Vec<CheckOutcome> {
    let mut values = Group::new(Suite::Fuss, "values k <= 4");
    for k in 1..=4 {
        for n in 1..=limit {
            let res = count_fuss(k, n).map(|v| v == count_dp(k * n, n, false));
            values.check_result(res, || format!("k = {k}, n = {n}"));
        }
    }
    let mut recurrence = Group::new(Suite::Fuss, "recurrence k <= 3");
    for k in 1..=3 {
        for n in 1..=limit {
            recurrence.check_result(check_fuss_recurrence(k, n), || format!("k = {k}, n = {n}"));
        }
    }
    vec![values.finish(), recurrence.finish()]
}

fn oracle(limit: u64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for m in 1..=limit {
        let mut group = Group::new(Suite::Oracle, format!("m = {m}"));
        for n in 1..=limit {
            let dp = count_dp(m, n, false);
            let res = (|| -> Result<bool> {
                let mut ok = count_main(m, n)?.value == dp && count_recurrence(m, n)? == dp;
                if gcd(m, n) == 1 {
                    ok &= count_coprime(m, n)? == dp;
                }
                if m % n == 0 {
                    ok &= count_fuss(m / n, n)? == dp;
                }
                if m % 2 == 0 && 3 * m == 2 * n {
                    ok &= count_duchon(m / 2)? == dp;
                }
                Ok(ok)
            })();
            group.check_result(res, || format!("n = {n}"));
        }
        out.push(group.finish());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("all".parse::<Suite>().is_err());
    }

    #[test]
    fn small_limits_pass() {
        for suite in Suite::ALL {
            let limit = match suite {
                Suite::Hh => 2,
                Suite::Duchon | Suite::Fuss => 2,
                _ => 6,
            };
            let report = suite.run(Some(limit));
            assert!(!report.is_empty(), "{suite}");
            for outcome in report {
                assert!(outcome.passed, "{outcome}");
            }
        }
    }

    #[test]
    fn group_reports_failures() {
        let mut group = Group::new(Suite::Hh, "x");
        group.check(true, || unreachable!());
        group.check(false, || "bad".into());
        let outcome = group.finish();
        assert!(!outcome.passed);
        assert_eq!(outcome.detail, "1 of 2 cases failed: bad");
        assert!(outcome.to_string().starts_with("FAIL hh x"));
    }
}
