//! Command implementations for the `dyck` binary.
//!
//! Every command renders its full output to a string so the binary only has
//! to print it and pick an exit status.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dyck_core::paths::EnumLimit;
use dyck_core::verify::Suite;
use dyck_core::{census, count, BigRat, CountMethod, CountResult, DyckError, MultSeq};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "dyck", version, about = "Count generalized Dyck paths exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print C(m, n).
    Count {
        m: u64,
        n: u64,
        #[arg(long, default_value = "auto")]
        method: MethodArg,
        /// Also print the per-partition terms of the main formula.
        #[arg(long)]
        terms: bool,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Emit C(m, n) for 1 <= m <= max-m, 1 <= n <= max-n.
    Table {
        #[arg(long)]
        max_m: u64,
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run identity suites and report per-check results.
    Verify {
        #[arg(long, default_value = "all")]
        suite: SuiteArg,
        /// Size bound applied to every selected suite, or `default` for each suite's own.
        #[arg(long, value_parser = parse_limit, default_value = "default")]
        limit: SuiteLimit,
    },
    /// Count Dyck paths to (m, n) by type and period.
    Census {
        m: u64,
        n: u64,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Auto,
    Method(CountMethod),
}

impl std::str::FromStr for MethodArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            Ok(MethodArg::Auto)
        } else {
            s.parse().map(MethodArg::Method)
        }
    }
}

impl MethodArg {
    fn resolve(self) -> CountMethod {
        match self {
            MethodArg::Auto => CountMethod::Main,
            MethodArg::Method(method) => method,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    All,
    One(Suite),
}

impl std::str::FromStr for SuiteArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            Ok(SuiteArg::All)
        } else {
            s.parse().map(SuiteArg::One)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextOrJson {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] DyckError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(err) if err.is_consistency_failure() => EXIT_CHECK_FAILED,
            CliError::Io { .. } => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

/// What a successful command wants printed, and with which status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub status: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            status: EXIT_OK,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    /// `(part, multiplicity)` pairs.
    pub partition: Vec<(u64, u64)>,
    /// Exact fraction, `p/q` with `/1` omitted.
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub m: u64,
    pub n: u64,
    pub method: String,
    /// Decimal digits of the count.
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<TermRecord>>,
}

impl OutputRecord {
    pub fn from_result(m: u64, n: u64, result: &CountResult, with_terms: bool) -> Self {
        let terms = if with_terms {
            result.terms.as_ref().map(|terms| {
                terms
                    .iter()
                    .map(|(a, value)| TermRecord {
                        partition: a.part_multiplicities(),
                        value: fraction(value),
                    })
                    .collect()
            })
        } else {
            None
        };
        OutputRecord {
            m,
            n,
            method: result.method.name().to_string(),
            value: result.value.to_string(),
            terms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    #[serde(rename = "type")]
    pub path_type: Vec<(u64, u64)>,
    pub period: u64,
    pub count: String,
}

pub fn fraction(value: &BigRat) -> String {
    value.to_string()
}

/// `1^3`, `1 2`, `3`: parts with their multiplicity, exponent 1 omitted.
pub fn render_partition(a: &MultSeq) -> String {
    a.part_multiplicities()
        .into_iter()
        .map(|(part, mult)| {
            if mult == 1 {
                part.to_string()
            } else {
                format!("{part}^{mult}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn require_positive(name: &str, value: u64) -> Result<(), CliError> {
    if value == 0 {
        return Err(CliError::Usage(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Count {
            m,
            n,
            method,
            terms,
            format,
        } => cmd_count(m, n, method, terms, format),
        Command::Table {
            max_m,
            max_n,
            format,
            out,
        } => cmd_table(max_m, max_n, format, out),
        Command::Verify { suite, limit } => Ok(cmd_verify(suite, limit.0)),
        Command::Census { m, n, format } => cmd_census(m, n, format, EnumLimit::from_env()),
    }
}

pub fn cmd_count(
    m: u64,
    n: u64,
    method: MethodArg,
    terms: bool,
    format: TextOrJson,
) -> Result<Output, CliError> {
    require_positive("m", m)?;
    require_positive("n", n)?;
    let method = method.resolve();
    if terms && method != CountMethod::Main {
        return Err(CliError::Usage(format!(
            "--terms needs the main method, not {method}"
        )));
    }
    let result = count(m, n, method)?;
    let record = OutputRecord::from_result(m, n, &result, terms);
    let stdout = match format {
        TextOrJson::Json => to_json(&record),
        TextOrJson::Text => {
            let mut s = format!("{}\n", record.value);
            if terms {
                for (a, value) in result.terms.iter().flatten() {
                    let _ = writeln!(s, "{}\t{}", render_partition(a), fraction(value));
                }
            }
            s
        }
    };
    Ok(Output::ok(stdout))
}

pub fn table_records(max_m: u64, max_n: u64) -> Result<Vec<OutputRecord>, CliError> {
    require_positive("max-m", max_m)?;
    require_positive("max-n", max_n)?;
    let mut records = Vec::with_capacity((max_m * max_n) as usize);
    for m in 1..=max_m {
        for n in 1..=max_n {
            let result = count(m, n, CountMethod::Main)?;
            records.push(OutputRecord::from_result(m, n, &result, false));
        }
    }
    Ok(records)
}

pub fn cmd_table(
    max_m: u64,
    max_n: u64,
    format: TableFormat,
    out: Option<PathBuf>,
) -> Result<Output, CliError> {
    let records = table_records(max_m, max_n)?;
    let body = match format {
        TableFormat::Json => to_json(&records),
        TableFormat::Csv => {
            let mut s = String::from("m,n,value\n");
            for r in &records {
                let _ = writeln!(s, "{},{},{}", r.m, r.n, r.value);
            }
            s
        }
    };
    match out {
        Some(path) => {
            std::fs::write(&path, body).map_err(|source| CliError::Io { path, source })?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(body)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteLimit(pub Option<u64>);

fn parse_limit(s: &str) -> Result<SuiteLimit, String> {
    if s == "default" {
        return Ok(SuiteLimit(None));
    }
    s.parse().map(|l| SuiteLimit(Some(l))).map_err(|e| format!("{e}"))
}

pub fn cmd_verify(suite: SuiteArg, limit: Option<u64>) -> Output {
    let suites = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::One(suite) => vec![suite],
    };
    let mut stdout = String::new();
    let (mut passed, mut failed) = (0usize, 0usize);
    for suite in suites {
        for outcome in suite.run(limit) {
            if outcome.passed {
                passed += 1;
            } else {
                failed += 1;
            }
            let _ = writeln!(stdout, "{outcome}");
        }
    }
    let _ = writeln!(stdout, "summary: {passed} passed, {failed} failed");
    Output {
        stdout,
        status: if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED },
    }
}

pub fn cmd_census(m: u64, n: u64, format: TextOrJson, limit: EnumLimit) -> Result<Output, CliError> {
    require_positive("m", m)?;
    require_positive("n", n)?;
    let records = census(m, n, limit)?;
    let stdout = match format {
        TextOrJson::Json => {
            let entries: Vec<CensusEntry> = records
                .iter()
                .map(|r| CensusEntry {
                    path_type: r.path_type.part_multiplicities(),
                    period: r.period,
                    count: r.count.to_string(),
                })
                .collect();
            to_json(&entries)
        }
        TextOrJson::Text => {
            let mut s = String::new();
            for r in &records {
                let _ = writeln!(
                    s,
                    "type={} period={} count={}",
                    render_partition(&r.path_type),
                    r.period,
                    r.count
                );
            }
            let total: dyck_core::BigNat = records.iter().map(|r| &r.count).sum();
            let _ = writeln!(s, "total {total}");
            s
        }
    };
    Ok(Output::ok(stdout))
}
