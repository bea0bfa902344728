//! `verifier` — command-line front end for the congruence verification engine.
//!
//! Subcommands:
//!   list-checks   enumerate the check registry
//!   run           evaluate checks over an inclusive prime range
//!   identities    re-verify the exact identity layer over its grids
//!   gamma         inspect the p-adic gamma function at one prime
//!
//! Exit codes: 0 = everything passed, 1 = at least one failure,
//! 2 = usage or configuration error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use franel::arith::{inv_mod, mul_mod, sub_mod};
use franel::checks::{registry, run_check};
use franel::gammap::{
    derivative_ratio_shifted_harmonic, derivative_ratio_wilson, gamma_p, wilson_quotient,
    GammaTable,
};
use franel::identities::sweep_identities;
use franel::padic::{prime_power, reduce_mod_pk};
use franel::primes::is_prime;
use franel::rng::DEFAULT_SEED;
use franel::sequences::SequenceCache;
use franel::sweep::{render_csv, render_json, render_table, sweep_seeded};
use franel::{Error, ExactRational};

#[derive(Parser)]
#[command(
    name = "verifier",
    version,
    about = "Modular verification of congruences for cubed-binomial sums",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every registered check with its modulus and applicability.
    ListChecks,
    /// Evaluate checks at every applicable prime in a range.
    Run {
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Inclusive prime range, written `lo..hi` (or `lo..=hi`).
        #[arg(long, value_parser = parse_range)]
        primes: (u64, u64),
        /// Number of worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report format.
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Write the report to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify the exact (rational-arithmetic) identity layer.
    Identities {
        /// Cap on the grid parameter n; each identity also has its own bound.
        #[arg(long, default_value_t = 100)]
        max_n: u64,
        /// Emit a JSON summary instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Print p-adic gamma values, law-check outcomes, and the derivative table.
    Gamma {
        /// Prime p >= 5.
        #[arg(long)]
        p: u64,
        /// Working precision for the value table: mod p (1) or mod p^2 (2).
        #[arg(long, default_value_t = 1)]
        precision: u32,
        /// Emit a JSON summary instead of the table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a range like `7..1000`, got `{s}`"))?;
    let lo = lo.trim().parse::<u64>().map_err(|e| format!("bad lower bound `{lo}`: {e}"))?;
    let hi = hi.trim().parse::<u64>().map_err(|e| format!("bad upper bound `{hi}`: {e}"))?;
    Ok((lo, hi))
}

/// VERIFIER_SEED (decimal or 0x-hex) or the library default.
fn seed_from_env() -> Result<u64, String> {
    let raw = match std::env::var("VERIFIER_SEED") {
        Err(std::env::VarError::NotPresent) => return Ok(DEFAULT_SEED),
        Err(e) => return Err(format!("VERIFIER_SEED: {e}")),
        Ok(s) => s,
    };
    let t = raw.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse::<u64>(),
    };
    parsed.map_err(|e| format!("VERIFIER_SEED `{raw}` is not a u64: {e}"))
}

fn main() -> ExitCode {
    // std ignores SIGPIPE, turning `verifier list-checks | head` into a
    // broken-pipe panic; restore the default so a closed pipe ends us quietly.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::ListChecks => {
            list_checks();
            Ok(true)
        }
        Command::Run { checks, primes, jobs, format, out } => {
            run_sweep(&checks, primes, jobs, format, out)
        }
        Command::Identities { max_n, json } => run_identities(max_n, json),
        Command::Gamma { p, precision, json } => run_gamma(p, precision, json),
    }
}

fn list_checks() {
    let defs = registry();
    let wid = defs.iter().map(|d| d.id.len()).max().unwrap_or(0);
    println!("{} checks registered\n", defs.len());
    for d in defs {
        let rep = if d.uses_representation { "  [uses x, y]" } else { "" };
        println!(
            "{:wid$}  mod p^{}  [{}]{}",
            d.id, d.modulus_exponent, d.applicability.describe(), rep
        );
        println!("{:wid$}      {}", "", d.statement);
    }
}

fn run_sweep(
    checks_arg: &str,
    (lo, hi): (u64, u64),
    jobs: usize,
    format: Format,
    out: Option<PathBuf>,
) -> Result<bool, String> {
    let seed = seed_from_env()?;
    let ids: Vec<&str> = if checks_arg.trim().eq_ignore_ascii_case("all") {
        registry().iter().map(|d| d.id).collect()
    } else {
        checks_arg.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
    };
    let report = sweep_seeded(&ids, lo, hi, jobs, seed).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Table => render_table(&report),
        Format::Json => render_json(&report),
        Format::Csv => render_csv(&report),
    };
    match out {
        Some(path) => {
            fs::write(&path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            eprintln!("report written to {}", path.display());
        }
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
        }
    }
    Ok(report.all_pass)
}

fn run_identities(max_n: u64, json: bool) -> Result<bool, String> {
    let seed = seed_from_env()?;
    let report = sweep_identities(max_n, seed);
    if json {
        let doc = serde_json::json!({
            "max_n": max_n.to_string(),
            "identities": report.per_identity.iter().map(|s| serde_json::json!({
                "id": s.id,
                "cases": s.cases.to_string(),
                "failures": s.failures.to_string(),
                "first_failure": s.first_failure.as_ref().map(|c| c.params.clone()),
            })).collect::<Vec<_>>(),
            "all_pass": report.all_pass,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        let wid = report.per_identity.iter().map(|s| s.id.len()).max().unwrap_or(2);
        for s in &report.per_identity {
            let verdict = if s.failures == 0 { "PASS" } else { "FAIL" };
            let mut line = format!("{verdict}  {:wid$}  {:>5} cases", s.id, s.cases);
            if let Some(f) = &s.first_failure {
                line.push_str(&format!(
                    "  first failure at {} (lhs {} != rhs {})",
                    f.params, f.lhs, f.rhs
                ));
            }
            println!("{line}");
        }
        println!("{}", if report.all_pass { "ALL PASS" } else { "FAILURES PRESENT" });
    }
    Ok(report.all_pass)
}

/// The five registry checks exercised by the `gamma` subcommand.
const GAMMA_CHECKS: [&str; 5] = [
    "CHK-GAMMA-FUNC",
    "CHK-GAMMA-REFL",
    "CHK-GAMMA-TAYLOR",
    "CHK-GAMMA-DERIV",
    "CHK-GAMMA-PROD",
];

fn run_gamma(p: u64, precision: u32, json: bool) -> Result<bool, String> {
    if !(1..=2).contains(&precision) {
        return Err(format!("precision must be 1 or 2, got {precision}"));
    }
    if p < 5 || !is_prime(p) {
        return Err(format!("p must be a prime >= 5, got {p}"));
    }
    let k = precision;
    let m = prime_power(p, k);
    let cache = SequenceCache::new();

    // Value table: small integers plus the rational arguments the congruence
    // layer leans on (all lie in Z_p for p >= 5).
    let mut table = GammaTable::new(p, k);
    let mut values: Vec<(String, String)> = (0..=9u64)
        .map(|n| (n.to_string(), table.at(n).to_string()))
        .collect();
    let rational_args: [(&str, i64, i64); 6] =
        [("1/2", 1, 2), ("1/3", 1, 3), ("2/3", 2, 3), ("1/6", 1, 6), ("5/6", 5, 6), ("-1/3", -1, 3)];
    for (label, num, den) in rational_args {
        let q = ExactRational::ratio(num, den);
        let r = gamma_p(&q, p, k).map_err(|e| e.to_string())?;
        values.push((label.to_string(), r.residue.to_string()));
    }

    let wq = reduce_mod_pk(&wilson_quotient(p), p, 1).map_err(|e| e.to_string())?.residue;

    // Law checks from the registry (single source of truth for the scans).
    struct LawOutcome {
        id: &'static str,
        outcome: &'static str, // "pass" | "fail" | "skipped"
        detail: String,
    }
    let mut laws = Vec::new();
    let mut all_pass = true;
    for id in GAMMA_CHECKS {
        match run_check(id, p) {
            Ok(r) => {
                if !r.pass {
                    all_pass = false;
                }
                laws.push(LawOutcome {
                    id,
                    outcome: if r.pass { "pass" } else { "fail" },
                    detail: r.note.unwrap_or_default(),
                });
            }
            Err(Error::NotApplicable { requires, .. }) => {
                laws.push(LawOutcome { id, outcome: "skipped", detail: format!("requires {requires}") });
            }
            Err(e) => return Err(e.to_string()),
        }
    }

    // Derivative table over all residues: finite difference vs the two closed
    // forms, sharing one mod-p^2 table across the whole scan.
    let m2 = p * p;
    let mut t2 = GammaTable::new(p, 2);
    let mut stated_matches = 0u64;
    let mut corrected_matches = 0u64;
    let mut rows: Vec<(u64, u64, u64, u64)> = Vec::new();
    for a in 0..p {
        let n0 = if a == 0 { m2 } else { a };
        let g0 = t2.at(n0);
        let fd_num = sub_mod(t2.at(n0 + p), g0, m2);
        debug_assert_eq!(fd_num % p, 0);
        let fd = mul_mod(fd_num / p, inv_mod(g0 % p, p).expect("unit"), p);
        let alpha = ExactRational::from_int(a as i64);
        let stated =
            derivative_ratio_shifted_harmonic(&alpha, p, &cache).map_err(|e| e.to_string())?.residue;
        let corrected = derivative_ratio_wilson(&alpha, p, &cache).map_err(|e| e.to_string())?.residue;
        if stated == fd {
            stated_matches += 1;
        }
        if corrected == fd {
            corrected_matches += 1;
        }
        if rows.len() < 12 {
            rows.push((a, fd, stated, corrected));
        }
    }

    if json {
        let doc = serde_json::json!({
            "p": p.to_string(),
            "precision": k,
            "modulus": m.to_string(),
            "values": values.iter().map(|(arg, res)| serde_json::json!({
                "arg": arg, "residue": res,
            })).collect::<Vec<_>>(),
            "wilson_quotient": wq.to_string(),
            "laws": laws.iter().map(|l| serde_json::json!({
                "id": l.id, "outcome": l.outcome, "detail": &l.detail,
            })).collect::<Vec<_>>(),
            "derivative": {
                "residues": p.to_string(),
                "stated_matches": stated_matches.to_string(),
                "corrected_matches": corrected_matches.to_string(),
            },
            "all_pass": all_pass,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("p = {p}, precision p^{k} = {m}\n");
        println!("values of the p-adic gamma function mod {m}:");
        for (arg, res) in &values {
            println!("  G({arg:>4}) = {res}");
        }
        println!("\nWilson quotient ((p-1)! + 1)/p = {wq} (mod {p})\n");
        println!("law checks at p = {p}:");
        for l in &laws {
            let tail = if l.detail.is_empty() { String::new() } else { format!("  -- {}", l.detail) };
            println!("  {:18} {}{tail}", l.id, l.outcome.to_uppercase());
        }
        println!("\nderivative ratio at integer points (mod {p}):");
        println!("  {:>4}  {:>10}  {:>10}  {:>10}", "a", "finite", "stated", "corrected");
        for (a, fd, st, co) in &rows {
            let mark = |v: &u64| if v == fd { ' ' } else { '*' };
            println!("  {a:>4}  {fd:>10}  {st:>10}{}  {co:>10}{}", mark(st), mark(co));
        }
        if p > rows.len() as u64 {
            println!("  ... ({} residues total)", p);
        }
        println!(
            "  stated closed form matches {stated_matches}/{p} residues; \
             shifted-harmonic-minus-Wilson form matches {corrected_matches}/{p}"
        );
    }
    Ok(all_pass)
}
