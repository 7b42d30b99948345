//! CLI contract tests: output formats, exit codes, and the environment
//! override.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-census"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-census"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn parse_json(output: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(output).trim()).expect("stdout is valid JSON")
}

#[test]
fn order_prints_the_order() {
    let output = run(&["order", "15", "4", "5"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output).trim(), "6");
}

#[test]
fn order_rejects_non_units() {
    let output = run(&["order", "15", "3", "0"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("gcd(3, 15)"));
}

#[test]
fn json_output_round_trips() {
    for args in [
        vec!["order", "15", "4", "5", "--format", "json"],
        vec!["cycles", "15", "4", "5", "--format", "json"],
        vec!["count", "3", "--method", "burnside", "--format", "json"],
        vec!["d6p", "5", "--format", "json"],
        vec!["table", "--n-list", "3,5", "--format", "json"],
    ] {
        let output = run(&args);
        assert_eq!(output.status.code(), Some(0), "{args:?}");
        let value = parse_json(&output);
        let reparsed: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(value, reparsed, "{args:?}");
    }
}

#[test]
fn count_json_schema() {
    let output = run(&["count", "3", "--method", "burnside", "--format", "json"]);
    let value = parse_json(&output);
    assert_eq!(value["n"], 3);
    assert_eq!(value["aut_order"], 6);
    assert_eq!(value["burnside_sum"], "72");
    assert_eq!(value["orbit_count"], "12");
    assert_eq!(value["dci"], "known_dci");
    assert_eq!(value["method"], "burnside");
}

#[test]
fn count_methods_print_identical_counts() {
    for n in ["3", "5", "15", "21"] {
        let burnside = run(&["count", n, "--method", "burnside", "--format", "json"]);
        let theorem = run(&["count", n, "--method", "theorem", "--format", "json"]);
        assert_eq!(
            parse_json(&burnside)["orbit_count"],
            parse_json(&theorem)["orbit_count"],
            "n = {n}"
        );
    }
}

#[test]
fn count_rejects_non_squarefree_for_theorem() {
    let output = run(&["count", "9", "--method", "theorem"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("square-free"));
}

#[test]
fn csv_always_has_the_header() {
    let output = run(&["count", "15", "--format", "csv"]);
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,p_or_empty,aut_order,orbit_count,dci,method"));
    assert_eq!(lines.next(), Some("15,,120,4512576,known_dci,burnside"));

    let table = run(&["table", "--n-list", "9", "--method", "theorem", "--format", "csv"]);
    assert_eq!(table.status.code(), Some(1));
    let text = stdout(&table);
    assert_eq!(text.lines().next(), Some("n,p_or_empty,aut_order,orbit_count,dci,method"));
}

#[test]
fn table_reports_row_errors_without_aborting() {
    let output = run(&["table", "--n-list", "3,9,5", "--method", "theorem", "--format", "json"]);
    assert_eq!(output.status.code(), Some(1));
    let rows = parse_json(&output);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["orbit_count"], "12");
    assert!(rows[1]["error"].as_str().unwrap().contains("square-free"));
    assert_eq!(rows[2]["orbit_count"], "44");
}

#[test]
fn table_p_list_defaults_to_the_closed_form() {
    let output = run(&["table", "--p-list", "5,7", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    let rows = parse_json(&output);
    assert_eq!(rows[0]["method"], "d6p");
    assert_eq!(rows[0]["p"], 5);
    assert_eq!(rows[0]["orbit_count"], "4512576");
    assert_eq!(rows[1]["orbit_count"], "8729668864");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["count"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["table"]).status.code(), Some(2));
    assert_eq!(run(&["count", "9", "--method", "bogus"]).status.code(), Some(2));
}

#[test]
fn d6p_rejects_bad_primes() {
    let output = run(&["d6p", "3"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("prime p >= 5"));
    assert_eq!(run(&["d6p", "9"]).status.code(), Some(1));
}

#[test]
fn oracle_method_and_width_override() {
    let output = run(&["count", "5", "--method", "oracle", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(parse_json(&output)["orbit_count"], "44");

    let too_small = run_env(
        &["count", "5", "--method", "oracle"],
        "CAYLEY_CENSUS_MAX_MASK_BITS",
        "5",
    );
    assert_eq!(too_small.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&too_small.stderr).contains("too large"));

    let widened = run_env(
        &["count", "5", "--method", "oracle", "--format", "json"],
        "CAYLEY_CENSUS_MAX_MASK_BITS",
        "12",
    );
    assert_eq!(widened.status.code(), Some(0));

    let garbage = run_env(
        &["count", "5", "--method", "oracle"],
        "CAYLEY_CENSUS_MAX_MASK_BITS",
        "many",
    );
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn cycle_methods_agree() {
    for (n, r, t) in [("15", "4", "5"), ("9", "2", "3"), ("12", "7", "8")] {
        let formula = run(&["cycles", n, r, t, "--method", "formula", "--format", "json"]);
        let perm = run(&["cycles", n, r, t, "--method", "perm", "--format", "json"]);
        let mut lhs = parse_json(&formula);
        let mut rhs = parse_json(&perm);
        lhs["method"] = serde_json::Value::Null;
        rhs["method"] = serde_json::Value::Null;
        assert_eq!(lhs, rhs, "n={n} r={r} t={t}");
    }
}

#[test]
fn count_d6p_requires_multiple_of_three() {
    let output = run(&["count", "10", "--method", "d6p"]);
    assert_eq!(output.status.code(), Some(1));
    let output = run(&["count", "15", "--method", "d6p", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(parse_json(&output)["orbit_count"], "4512576");
}
