use std::process::{Command, Output};

use dyck_cli::{CensusEntry, OutputRecord};
use dyck_core::{count_dp, BigNat};

fn dyck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyck"))
        .args(args)
        .env_remove("DYCK_ENUM_LIMIT")
        .output()
        .expect("run dyck")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_prints_decimal_value() {
    let out = dyck(&["count", "3", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n");
    assert_eq!(stdout(&dyck(&["count", "5", "3", "--method", "coprime"])), "7\n");
    assert_eq!(stdout(&dyck(&["count", "4", "6", "--method", "duchon"])), "23\n");
    assert_eq!(stdout(&dyck(&["count", "8", "4", "--method", "fuss"])), "55\n");
}

#[test]
fn count_json_with_terms() {
    let out = dyck(&["count", "3", "3", "--terms", "--format", "json"]);
    assert!(out.status.success());
    let record: OutputRecord = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(record.value, "5");
    let terms = record.terms.unwrap();
    let values: Vec<_> = terms.iter().map(|t| t.value.as_str()).collect();
    assert_eq!(values, ["1/6", "3/2", "10/3"]);
    assert_eq!(terms[1].partition, vec![(1, 1), (2, 1)]);
}

#[test]
fn precondition_failures_exit_two() {
    for args in [
        &["count", "4", "4", "--method", "coprime"][..],
        &["count", "4", "5", "--method", "duchon"],
        &["count", "3", "6", "--method", "fuss"],
        &["count", "0", "3"],
        &["count", "3", "3", "--method", "nope"],
        &["table", "--max-m", "0", "--max-n", "3"],
        &["table", "--max-m", "x", "--max-n", "3"],
        &["census", "13", "12"],
        &["verify", "--suite", "nope"],
    ] {
        let out = dyck(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn table_csv_round_trips_and_is_deterministic() {
    let first = dyck(&["table", "--max-m", "6", "--max-n", "7", "--format", "csv"]);
    let second = dyck(&["table", "--max-m", "6", "--max-n", "7", "--format", "csv"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let text = stdout(&first);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,n,value"));
    let mut cells = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        let (m, n): (u64, u64) = (fields[0].parse().unwrap(), fields[1].parse().unwrap());
        let value: BigNat = fields[2].parse().unwrap();
        assert_eq!(value, count_dp(m, n, false), "({m}, {n})");
        cells += 1;
    }
    assert_eq!(cells, 42);
}

#[test]
fn table_json_diagonal_is_catalan() {
    let out = dyck(&["table", "--max-m", "5", "--max-n", "5", "--format", "json"]);
    let records: Vec<OutputRecord> = serde_json::from_slice(&out.stdout).unwrap();
    let diagonal: Vec<_> = records
        .iter()
        .filter(|r| r.m == r.n)
        .map(|r| r.value.as_str())
        .collect();
    assert_eq!(diagonal, ["1", "2", "5", "14", "42"]);
    let cell = records.iter().find(|r| (r.m, r.n) == (2, 3)).unwrap();
    assert_eq!(cell.value, "2");
    assert_eq!(records[0].value, "1");
    assert!(records.iter().all(|r| r.terms.is_none() && r.method == "main"));
}

#[test]
fn table_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let out = dyck(&["table", "--max-m", "3", "--max-n", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("m,n,value\n1,1,1\n"));
    assert!(body.ends_with("3,3,5\n"));
}

#[test]
fn large_values_print_in_full() {
    let out = dyck(&["count", "40", "40", "--method", "recurrence"]);
    assert_eq!(stdout(&out).trim(), "2622127042276492108820");
    let out = dyck(&["count", "40", "40"]);
    assert_eq!(stdout(&out).trim(), "2622127042276492108820");
}

#[test]
fn census_json_totals() {
    let out = dyck(&["census", "3", "3", "--format", "json"]);
    assert!(out.status.success());
    let entries: Vec<CensusEntry> = serde_json::from_slice(&out.stdout).unwrap();
    let total: u64 = entries.iter().map(|e| e.count.parse::<u64>().unwrap()).sum();
    assert_eq!(total, 5);

    let one: Vec<CensusEntry> = serde_json::from_slice(&dyck(&["census", "1", "1", "--format", "json"]).stdout).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].count, "1");

    let two: Vec<CensusEntry> = serde_json::from_slice(&dyck(&["census", "2", "2", "--format", "json"]).stdout).unwrap();
    let mut types: Vec<_> = two.iter().map(|e| (e.path_type.clone(), e.count.clone())).collect();
    types.sort();
    assert_eq!(types, vec![(vec![(1, 2)], "1".into()), (vec![(2, 1)], "1".into())]);
}

#[test]
fn census_limit_comes_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_dyck"))
        .args(["census", "3", "3"])
        .env("DYCK_ENUM_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_dyck"))
        .args(["census", "13", "12"])
        .env("DYCK_ENUM_LIMIT", "30")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).ends_with(&format!("total {}\n", count_dp(13, 12, false))));
}

#[test]
fn verify_suites_pass() {
    for (suite, limit) in [("hh", "4"), ("oracle", "10"), ("catalan", "30")] {
        let out = dyck(&["verify", "--suite", suite, "--limit", limit]);
        let text = stdout(&out);
        assert!(out.status.success(), "{text}");
        assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 1);
        assert!(!text.contains("FAIL"));
        assert!(text.ends_with(" 0 failed\n"));
    }
}

#[test]
fn verify_all_with_defaults_passes() {
    let out = dyck(&["verify", "--suite", "all", "--limit", "default"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert_eq!(dyck(&["verify"]).stdout, out.stdout);
}
