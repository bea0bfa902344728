//! Prime sweeps over the check registry: deterministic parallel evaluation
//! and machine-readable reports (JSON, CSV, terminal table).
//!
//! Determinism contract: the report depends only on (version, check set,
//! prime range, seed). Work is distributed over threads but results are
//! canonically sorted by (p, registry position) and every randomized check
//! derives its stream from (seed, check id, p), so byte-identical output
//! falls out regardless of the worker count.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::checks::{find_check, registry_index, run_check_with, CheckDef, CheckResult};
use crate::error::Error;
use crate::primes::primes_in;
use crate::rng::DEFAULT_SEED;
use crate::sequences::SequenceCache;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Per-check pass/fail/skipped counts. "Skipped" counts primes in range
/// where the check's applicability predicate rejects the prime.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
}

#[derive(Debug)]
pub struct SweepReport {
    pub version: &'static str,
    pub lo: u64,
    pub hi: u64,
    pub results: Vec<CheckResult>,
    pub summary: BTreeMap<&'static str, CheckTally>,
    pub all_pass: bool,
}

/// Run `check_ids` over every prime in [lo, hi] with the default seed.
pub fn sweep(check_ids: &[&str], lo: u64, hi: u64, jobs: usize) -> Result<SweepReport, Error> {
    sweep_seeded(check_ids, lo, hi, jobs, DEFAULT_SEED)
}

/// `sweep` with an explicit sample seed (the CLI wires VERIFIER_SEED here).
pub fn sweep_seeded(
    check_ids: &[&str],
    lo: u64,
    hi: u64,
    jobs: usize,
    seed: u64,
) -> Result<SweepReport, Error> {
    if lo > hi {
        return Err(Error::ParamOutOfRange(format!(
            "prime range is empty: {lo} > {hi}"
        )));
    }
    // validate and dedupe, keeping registry order
    let mut defs: Vec<&'static CheckDef> = Vec::new();
    for id in check_ids {
        let def = find_check(id)?;
        if !defs.iter().any(|d| d.id == def.id) {
            defs.push(def);
        }
    }
    let primes = primes_in(lo, hi);
    let pairs: Vec<(u64, &'static CheckDef)> = primes
        .iter()
        .flat_map(|&p| defs.iter().map(move |&d| (p, d)))
        .collect();

    let cache = SequenceCache::new();
    let cursor = AtomicUsize::new(0);
    let workers = jobs.max(1).min(pairs.len().max(1));

    let mut outcomes: Vec<(u64, Result<CheckResult, Error>)> = Vec::with_capacity(pairs.len());
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for _ in 0..workers {
            handles.push(scope.spawn(|| {
                let mut local = Vec::new();
                loop {
                    let i = cursor.fetch_add(1, Ordering::Relaxed);
                    if i >= pairs.len() {
                        break;
                    }
                    let (p, def) = pairs[i];
                    local.push((p, run_check_with(def.id, p, &cache, seed)));
                }
                local
            }));
        }
        for h in handles {
            outcomes.extend(h.join().expect("sweep worker panicked"));
        }
    });

    let mut summary: BTreeMap<&'static str, CheckTally> = BTreeMap::new();
    for def in &defs {
        summary.insert(def.id, CheckTally::default());
    }
    let mut results = Vec::new();
    for (_, outcome) in outcomes {
        match outcome {
            Ok(r) => {
                let tally = summary.get_mut(r.check).expect("tallied check");
                if r.pass {
                    tally.pass += 1;
                } else {
                    tally.fail += 1;
                }
                results.push(r);
            }
            Err(Error::NotApplicable { check, .. }) => {
                let def = defs.iter().find(|d| d.id == check).expect("tallied check");
                summary.get_mut(def.id).expect("tallied check").skipped += 1;
            }
            Err(e) => panic!("sweep evaluation error: {e}"),
        }
    }
    results.sort_by_key(|r| (r.p, registry_index(r.check).expect("registered check")));
    let all_pass = results.iter().all(|r| r.pass);

    Ok(SweepReport { version: VERSION, lo, hi, results, summary, all_pass })
}

// ---------------------------------------------------------------------------
// rendering

#[derive(Serialize)]
struct JsonReport<'a> {
    version: &'a str,
    range: JsonRange,
    results: Vec<JsonResult<'a>>,
    summary: BTreeMap<&'a str, JsonTally>,
}

#[derive(Serialize)]
struct JsonRange {
    lo: String,
    hi: String,
}

#[derive(Serialize)]
struct JsonResult<'a> {
    check: &'a str,
    p: String,
    x: String,
    y: String,
    lhs: String,
    rhs: String,
    modulus: String,
    pass: bool,
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonTally {
    pass: String,
    fail: String,
    skipped: String,
}

fn result_row(r: &CheckResult) -> JsonResult<'_> {
    JsonResult {
        check: r.check,
        p: r.p.to_string(),
        x: r.x.map(|v| v.to_string()).unwrap_or_default(),
        y: r.y.map(|v| v.to_string()).unwrap_or_default(),
        lhs: r.lhs.clone(),
        rhs: r.rhs.clone(),
        modulus: r.modulus.to_string(),
        pass: r.pass,
        note: r.note.as_deref(),
    }
}

/// Canonical single-line JSON: every integer as a decimal string (residues
/// and moduli outgrow u64 in deeper sweeps; uniformity keeps the schema
/// simple), absent x/y as empty strings, absent note as null.
pub fn render_json(report: &SweepReport) -> String {
    let doc = JsonReport {
        version: report.version,
        range: JsonRange { lo: report.lo.to_string(), hi: report.hi.to_string() },
        results: report.results.iter().map(result_row).collect(),
        summary: report
            .summary
            .iter()
            .map(|(id, t)| {
                (*id, JsonTally {
                    pass: t.pass.to_string(),
                    fail: t.fail.to_string(),
                    skipped: t.skipped.to_string(),
                })
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("report serialization is infallible")
}

fn csv_escape(field: &str) -> String {
    if field.contains(['"', ',', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// One row per result, same columns as the JSON result objects.
pub fn render_csv(report: &SweepReport) -> String {
    let mut out = String::from("check,p,x,y,lhs,rhs,modulus,pass,note\n");
    for r in &report.results {
        let row = result_row(r);
        let fields = [
            row.check,
            &row.p,
            &row.x,
            &row.y,
            &row.lhs,
            &row.rhs,
            &row.modulus,
            if row.pass { "true" } else { "false" },
            row.note.unwrap_or(""),
        ];
        let line: Vec<String> = fields.iter().map(|f| csv_escape(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Human-readable listing plus a per-check summary footer.
pub fn render_table(report: &SweepReport) -> String {
    let mut out = String::new();
    for r in &report.results {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        let xy = match (r.x, r.y) {
            (Some(x), Some(y)) => format!("  x={x} y={y}"),
            _ => String::new(),
        };
        out.push_str(&format!(
            "{verdict}  {:<16} p={:<6} lhs={} rhs={} mod={}{}",
            r.check, r.p, r.lhs, r.rhs, r.modulus, xy
        ));
        if let Some(note) = &r.note {
            out.push_str(&format!("  [{note}]"));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "\nversion {}  primes [{}, {}]\n",
        report.version, report.lo, report.hi
    ));
    for (id, t) in &report.summary {
        out.push_str(&format!(
            "{:<16} pass {:<5} fail {:<5} skipped {}\n",
            id, t.pass, t.fail, t.skipped
        ));
    }
    out.push_str(if report.all_pass { "ALL PASS\n" } else { "FAILURES PRESENT\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_check_set_is_a_successful_empty_report() {
        let r = sweep(&[], 7, 100, 2).unwrap();
        assert!(r.results.is_empty());
        assert!(r.summary.is_empty());
        assert!(r.all_pass);
    }

    #[test]
    fn unknown_check_is_rejected() {
        assert!(matches!(sweep(&["CHK-NOPE"], 7, 20, 1), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn inverted_range_is_rejected() {
        assert!(matches!(sweep(&["CHK-FP2"], 50, 7, 1), Err(Error::ParamOutOfRange(_))));
    }

    #[test]
    fn skipped_primes_are_counted_not_failed() {
        let r = sweep(&["CHK-FP2"], 5, 13, 1).unwrap();
        // applicable: 7, 13; skipped: 5, 11 (wrong class)
        let t = &r.summary["CHK-FP2"];
        assert_eq!((t.pass, t.fail, t.skipped), (2, 0, 2));
        assert!(r.all_pass);
        assert_eq!(r.results.len(), 2);
    }

    #[test]
    fn report_is_identical_across_worker_counts() {
        let ids = ["CHK-THM11A", "CHK-WOLST", "CHK-SUNH-HHALF"];
        let a = sweep(&ids, 5, 60, 1).unwrap();
        let b = sweep(&ids, 5, 60, 8).unwrap();
        assert_eq!(render_json(&a), render_json(&b));
        assert_eq!(render_csv(&a), render_csv(&b));
    }

    #[test]
    fn json_schema_shape() {
        let r = sweep(&["CHK-FP2"], 7, 7, 1).unwrap();
        let json = render_json(&r);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["version"], VERSION);
        assert_eq!(v["range"]["lo"], "7");
        assert_eq!(v["range"]["hi"], "7");
        let row = &v["results"][0];
        assert_eq!(row["check"], "CHK-FP2");
        assert_eq!(row["p"], "7");
        assert_eq!(row["lhs"], "10");
        assert_eq!(row["rhs"], "10");
        assert_eq!(row["modulus"], "49");
        assert_eq!(row["pass"], true);
        assert_eq!(row["x"], "-2");
        assert_eq!(row["y"], "1");
        assert_eq!(v["summary"]["CHK-FP2"]["pass"], "1");
    }

    #[test]
    fn csv_escapes_notes() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
