//! End-to-end tests for the `verifier` binary: argument handling, output
//! formats, exit codes, and determinism of seeded runs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_verifier"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn list_checks_prints_the_whole_registry() {
    let out = run(&["list-checks"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let ids: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("CHK-"))
        .collect();
    assert_eq!(ids.len(), 62, "registry size visible from the CLI");
    for needle in [
        "CHK-THM11A",
        "CHK-WOLST",
        "CHK-SUNH-H2FULL",
        "CHK-GAMMA-DERIV",
        "CHK-ZHUYAO",
    ] {
        assert!(text.contains(needle), "{needle} missing from listing");
    }
}

#[test]
fn json_report_matches_the_documented_shape() {
    let out = run(&[
        "run",
        "--checks",
        "CHK-FP2,CHK-THM12",
        "--primes",
        "7..60",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert!(doc["version"].is_string());
    assert_eq!(doc["range"]["lo"], "7");
    assert_eq!(doc["range"]["hi"], "60");
    let results = doc["results"].as_array().expect("results array");
    assert!(!results.is_empty());
    for row in results {
        for key in ["check", "p", "x", "y", "lhs", "rhs", "modulus", "note"] {
            assert!(
                row.get(key).is_some(),
                "result row missing key {key}: {row}"
            );
        }
        // numbers are decimal strings so arbitrary precision survives JSON
        assert!(row["p"].as_str().unwrap().parse::<u64>().is_ok());
        assert!(row["pass"].is_boolean());
        let x = row["x"].as_str().unwrap();
        assert!(x.is_empty() || x.parse::<i64>().is_ok());
    }
    let summary = doc["summary"].as_object().expect("summary object");
    assert_eq!(summary.len(), 2);
    for (_, entry) in summary {
        for key in ["pass", "fail", "skipped"] {
            // counters follow the decimal-string convention like every number
            assert!(entry[key].as_str().unwrap().parse::<u64>().is_ok());
        }
    }
}

#[test]
fn csv_report_has_a_header_and_data_rows() {
    let out = run(&[
        "run",
        "--checks",
        "CHK-FP2",
        "--primes",
        "7..30",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "check,p,x,y,lhs,rhs,modulus,pass,note"
    );
    // applicable primes in 7..30 are 7, 13, 19; skipped ones produce no row
    assert_eq!(lines.clone().count(), 3);
    assert!(lines.all(|l| l.starts_with("CHK-FP2,")));
}

#[test]
fn report_can_be_written_to_a_file() {
    let path: PathBuf = std::env::temp_dir().join(format!(
        "verifier-cli-test-{}.json",
        std::process::id()
    ));
    let out = run(&[
        "run",
        "--checks",
        "CHK-FP2",
        "--primes",
        "7..30",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).expect("file written");
    std::fs::remove_file(&path).ok();
    let doc: serde_json::Value = serde_json::from_str(&body).expect("valid json in file");
    assert_eq!(doc["summary"]["CHK-FP2"]["fail"], "0");
}

#[test]
fn unknown_check_and_bad_range_are_usage_errors() {
    let out = run(&["run", "--checks", "CHK-NOPE", "--primes", "7..50"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = run(&["run", "--checks", "CHK-FP2", "--primes", "50..7"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["run", "--checks", "CHK-FP2", "--primes", "sideways"]);
    assert_eq!(out.status.code(), Some(2));

    // clap's own usage failures surface as 2 as well
    let out = run(&["run", "--format", "yaml", "--primes", "7..50"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_sweep_exits_one() {
    // the gamma derivative law is recorded as failing, so a sweep over it
    // must report failure through the exit code
    let out = run(&[
        "run",
        "--checks",
        "CHK-GAMMA-DERIV",
        "--primes",
        "7..40",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let fails: u64 = doc["summary"]["CHK-GAMMA-DERIV"]["fail"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!(fails > 0);
}

#[test]
fn sweeps_are_byte_identical_across_worker_counts() {
    let args = |jobs: &'static str| {
        [
            "run", "--checks", "all", "--primes", "7..40", "--jobs", jobs, "--format", "json",
        ]
    };
    let a = run(&args("1"));
    let b = run(&args("4"));
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn identity_sweeps_are_deterministic_in_the_seed() {
    let run_with_seed = |seed: &str| {
        let out = bin()
            .args(["identities", "--max-n", "25", "--json"])
            .env("VERIFIER_SEED", seed)
            .output()
            .expect("binary runs");
        (out.status.code(), stdout(&out))
    };
    let (code_a, text_a) = run_with_seed("12345");
    let (code_b, text_b) = run_with_seed("12345");
    assert_eq!(code_a, Some(0));
    assert_eq!(code_a, code_b);
    assert_eq!(text_a, text_b, "same seed, same report");

    // hex seeds are accepted
    let (code_hex, _) = run_with_seed("0xDEADBEEF");
    assert_eq!(code_hex, Some(0));

    // junk seeds are a configuration error
    let out = bin()
        .args(["identities"])
        .env("VERIFIER_SEED", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identities_pass_on_their_full_grids() {
    let out = run(&["identities", "--max-n", "60", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["all_pass"], true);
    let ids = doc["identities"].as_array().unwrap();
    assert_eq!(ids.len(), 17);
    for entry in ids {
        assert_eq!(entry["failures"], "0", "identity {} failed", entry["id"]);
    }
}

#[test]
fn gamma_subcommand_validates_its_input() {
    // composite modulus
    let out = run(&["gamma", "--p", "6"]);
    assert_eq!(out.status.code(), Some(2));
    // too-small prime
    let out = run(&["gamma", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // unsupported precision
    let out = run(&["gamma", "--p", "7", "--precision", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gamma_subcommand_reports_the_known_failing_law() {
    let out = run(&["gamma", "--p", "13", "--precision", "2", "--json"]);
    // the derivative-law check fails by design, and the exit code says so
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["p"], "13");
    assert_eq!(doc["all_pass"], false);
    let laws = doc["laws"].as_array().expect("law results");
    let deriv = laws
        .iter()
        .find(|l| l["id"] == "CHK-GAMMA-DERIV")
        .expect("derivative law present");
    assert_eq!(deriv["outcome"], "fail");
    for l in laws {
        if l["id"] != "CHK-GAMMA-DERIV" {
            assert_eq!(l["outcome"], "pass", "unexpected outcome in {}", l["id"]);
        }
    }
    // the value table covers the canonical sample points
    let values = doc["values"].as_array().expect("value table");
    assert!(!values.is_empty());
    assert!(values[0]["arg"].is_string() && values[0]["residue"].is_string());
    // 13 is a Wilson prime, visible right here
    assert_eq!(doc["wilson_quotient"], "0");
}
