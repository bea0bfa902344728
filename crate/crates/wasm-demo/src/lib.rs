//! Browser bindings for the congruence-verification engine: a thin
//! JSON-over-strings facade over the core crate, sized so every exported call
//! returns quickly enough for interactive use on a single page.
//!
//! Every function returns a JSON document; errors come back as
//! `{"error": "..."}` so the page never needs to catch exceptions.

use wasm_bindgen::prelude::*;

use franel::checks::{registry, run_check, CheckResult};
use franel::gammap::{
    derivative_ratio_wilson, gamma_p, gamma_p_derivative_ratio, wilson_quotient, GammaTable,
};
use franel::identities::verify_identity;
use franel::primes::is_prime;
use franel::rng::DEFAULT_SEED;
use franel::sequences::SequenceCache;
use franel::sweep::{render_json, sweep};
use franel::{reduce_mod_pk, ExactRational};

/// Browser-side guard: sweeps beyond this many (check, prime) pairs would
/// make the page feel stuck, so the bindings refuse them.
const MAX_SWEEP_PAIRS: u64 = 4000;
const MAX_SINGLE_PRIME: u64 = 20_000;
const MAX_GAMMA_PRIME: u64 = 1000;
const MAX_IDENTITY_N: u64 = 200;

fn err(msg: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": msg.to_string() }).to_string()
}

fn result_json(r: &CheckResult) -> serde_json::Value {
    serde_json::json!({
        "check": r.check,
        "p": r.p.to_string(),
        "x": r.x.map(|v| v.to_string()).unwrap_or_default(),
        "y": r.y.map(|v| v.to_string()).unwrap_or_default(),
        "lhs": r.lhs,
        "rhs": r.rhs,
        "modulus": r.modulus.to_string(),
        "pass": r.pass,
        "note": r.note,
    })
}

/// The check registry as JSON, for populating pickers.
#[wasm_bindgen]
pub fn registry_json() -> String {
    let rows: Vec<_> = registry()
        .iter()
        .map(|d| {
            serde_json::json!({
                "id": d.id,
                "statement": d.statement,
                "modulus_exponent": d.modulus_exponent,
                "applicability": d.applicability.describe(),
                "uses_representation": d.uses_representation,
            })
        })
        .collect();
    serde_json::json!({ "checks": rows }).to_string()
}

/// Run one check at one prime.
#[wasm_bindgen]
pub fn run_single(id: &str, p: u64) -> String {
    if p > MAX_SINGLE_PRIME {
        return err(format!("p must be at most {MAX_SINGLE_PRIME} in the browser"));
    }
    if !is_prime(p) {
        return err(format!("{p} is not prime"));
    }
    match run_check(id, p) {
        Ok(r) => result_json(&r).to_string(),
        Err(e) => err(e),
    }
}

/// Run a comma-separated list of checks (or "all") over [lo, hi], returning
/// the same JSON report the CLI emits.
#[wasm_bindgen]
pub fn sweep_json(checks_csv: &str, lo: u64, hi: u64) -> String {
    let ids: Vec<&str> = if checks_csv.trim() == "all" {
        registry().iter().map(|d| d.id).collect()
    } else {
        checks_csv.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
    };
    if ids.is_empty() {
        return err("no checks selected");
    }
    if lo > hi {
        return err(format!("empty prime range: {lo} > {hi}"));
    }
    let primes = hi.saturating_sub(lo) / 2 + 1; // upper bound, only for the guard
    if primes * ids.len() as u64 > MAX_SWEEP_PAIRS {
        return err(format!(
            "sweep too large for the browser: limit is {MAX_SWEEP_PAIRS} (check, prime) pairs"
        ));
    }
    match sweep(&ids, lo, hi, 1) {
        Ok(report) => render_json(&report),
        Err(e) => err(e),
    }
}

/// Morita-Gamma explorer: canonical values, the Wilson quotient, and the
/// finite-difference derivative ratio against its matching closed form.
#[wasm_bindgen]
pub fn gamma_json(p: u64) -> String {
    if !(5..=MAX_GAMMA_PRIME).contains(&p) || !is_prime(p) {
        return err(format!("p must be a prime in [5, {MAX_GAMMA_PRIME}]"));
    }
    let cache = SequenceCache::new();
    let m2 = p * p;

    let mut values = Vec::new();
    let mut table = GammaTable::new(p, 2);
    for n in 0..10u64 {
        values.push(serde_json::json!({
            "arg": n.to_string(),
            "residue": table.at(n).to_string(),
            "modulus": m2.to_string(),
        }));
    }
    for (num, den) in [(1i64, 2i64), (1, 3), (2, 3), (1, 6), (5, 6), (-1, 3)] {
        let x = ExactRational::ratio(num, den);
        match gamma_p(&x, p, 2) {
            Ok(v) => values.push(serde_json::json!({
                "arg": format!("{num}/{den}"),
                "residue": v.residue.to_string(),
                "modulus": m2.to_string(),
            })),
            Err(_) => values.push(serde_json::json!({
                "arg": format!("{num}/{den}"),
                "residue": "outside Z_p",
                "modulus": m2.to_string(),
            })),
        }
    }

    let w = reduce_mod_pk(&wilson_quotient(p), p, 1).expect("integer").residue;

    let mut derivative = Vec::new();
    for a in 0..p.min(12) {
        let alpha = ExactRational::ratio(a as i64, 1);
        let fd = gamma_p_derivative_ratio(&alpha, p).expect("integer argument").residue;
        let closed = derivative_ratio_wilson(&alpha, p, &cache).expect("integer argument").residue;
        derivative.push(serde_json::json!({
            "residue_class": a.to_string(),
            "finite_difference": fd.to_string(),
            "harmonic_wilson_form": closed.to_string(),
            "agree": fd == closed,
        }));
    }

    serde_json::json!({
        "p": p.to_string(),
        "modulus": m2.to_string(),
        "wilson_quotient": w.to_string(),
        "values": values,
        "derivative": derivative,
    })
    .to_string()
}

/// Run one combinatorial identity over its grid up to max_n.
#[wasm_bindgen]
pub fn identity_json(id: &str, max_n: u64) -> String {
    if max_n > MAX_IDENTITY_N {
        return err(format!("max_n must be at most {MAX_IDENTITY_N} in the browser"));
    }
    match verify_identity(id, max_n, DEFAULT_SEED) {
        Ok(cases) => {
            let failures: Vec<_> = cases.iter().filter(|c| !c.pass).collect();
            let sample: Vec<_> = cases
                .iter()
                .take(8)
                .map(|c| {
                    serde_json::json!({
                        "params": c.params,
                        "lhs": c.lhs.to_string(),
                        "rhs": c.rhs.to_string(),
                        "pass": c.pass,
                    })
                })
                .collect();
            serde_json::json!({
                "id": id,
                "cases": cases.len(),
                "failures": failures.len(),
                "first_failure": failures.first().map(|c| c.params.clone()),
                "sample": sample,
            })
            .to_string()
        }
        Err(e) => err(e),
    }
}

/// The identity registry as JSON, for populating pickers.
#[wasm_bindgen]
pub fn identity_registry_json() -> String {
    let rows: Vec<_> = franel::identities::identity_registry()
        .iter()
        .map(|d| {
            serde_json::json!({
                "id": d.id,
                "statement": d.statement,
                "max_n": d.max_n,
            })
        })
        .collect();
    serde_json::json!({ "identities": rows }).to_string()
}
