//! The congruence check registry: every verified claim, bound to an
//! executable evaluator.
//!
//! A check evaluates one or more *instances* — (lhs, rhs) pairs of exact
//! rationals — and passes when every instance agrees modulo p^k (or exactly,
//! for instances flagged as identities). Instances let one check cover a
//! whole derivation chain: each displayed step is its own regression.

use std::sync::OnceLock;

use crate::error::Error;
use crate::padic::{prime_power, reduce_mod_pk};
use crate::quadform::{represent, PrimeRepresentation};
use crate::rational::ExactRational;
use crate::rng::SplitMix64;
use crate::sequences::SequenceCache;

mod difference;
mod facts;
mod gamma;
mod lemmas;
mod theorems;
pub(crate) mod util;
mod weighted;

/// Which primes a check applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Applicability {
    /// p = 1 (mod 3) and p >= 7 — the splitting class for x^2 + 3y^2.
    OneMod3Ge7,
    /// p >= 5, all residue classes.
    Ge5,
    /// p > 5, all residue classes.
    Gt5,
    /// p > 3, all residue classes.
    Gt3,
}

impl Applicability {
    pub fn admits(&self, p: u64) -> bool {
        match self {
            Applicability::OneMod3Ge7 => p >= 7 && p % 3 == 1,
            Applicability::Ge5 => p >= 5,
            Applicability::Gt5 => p > 5,
            Applicability::Gt3 => p > 3,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Applicability::OneMod3Ge7 => "p = 1 (mod 3), p >= 7",
            Applicability::Ge5 => "p >= 5",
            Applicability::Gt5 => "p > 5",
            Applicability::Gt3 => "p > 3",
        }
    }
}

/// One (lhs, rhs) comparison inside a check.
pub struct Instance {
    pub label: String,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    /// Override of the check-level modulus exponent (e.g. a mod-p fact
    /// inside a mod-p^3 chain).
    pub k_override: Option<u32>,
    /// Compare exactly as rationals instead of modulo p^k.
    pub exact: bool,
}

impl Instance {
    pub fn cong(label: impl Into<String>, lhs: ExactRational, rhs: ExactRational) -> Self {
        Instance { label: label.into(), lhs, rhs, k_override: None, exact: false }
    }

    pub fn cong_k(label: impl Into<String>, lhs: ExactRational, rhs: ExactRational, k: u32) -> Self {
        Instance { label: label.into(), lhs, rhs, k_override: Some(k), exact: false }
    }

    pub fn exact(label: impl Into<String>, lhs: ExactRational, rhs: ExactRational) -> Self {
        Instance { label: label.into(), lhs, rhs, k_override: None, exact: true }
    }
}

/// Evaluator output: the instances plus an optional diagnostic note.
pub struct CheckEval {
    pub instances: Vec<Instance>,
    pub note: Option<String>,
}

impl CheckEval {
    pub fn new(instances: Vec<Instance>) -> Self {
        CheckEval { instances, note: None }
    }

    pub fn with_note(instances: Vec<Instance>, note: impl Into<String>) -> Self {
        CheckEval { instances, note: Some(note.into()) }
    }
}

/// Everything an evaluator may consume. Evaluators are pure in (p, seed).
pub struct CheckCtx<'a> {
    pub p: u64,
    pub cache: &'a SequenceCache,
    pub rep: Option<PrimeRepresentation>,
    pub seed: u64,
}

impl CheckCtx<'_> {
    /// x from p = x^2 + 3y^2 (only called by checks that declare the need).
    pub fn x(&self) -> i64 {
        self.rep.expect("check declares uses_representation").x
    }

    pub fn h(&self, n: u64) -> ExactRational {
        self.cache.harmonic(n, 1)
    }

    pub fn h2(&self, n: u64) -> ExactRational {
        self.cache.harmonic(n, 2)
    }
}

/// A registered check.
pub struct CheckDef {
    pub id: &'static str,
    /// Self-contained mathematical statement of what is verified.
    pub statement: &'static str,
    pub modulus_exponent: u32,
    pub applicability: Applicability,
    pub uses_representation: bool,
    pub eval: fn(&CheckCtx) -> CheckEval,
}

/// Result of one check at one prime.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: &'static str,
    pub p: u64,
    pub x: Option<i64>,
    pub y: Option<u64>,
    /// Residues as decimal strings; empty when a side failed to reduce.
    pub lhs: String,
    pub rhs: String,
    pub modulus: u64,
    pub pass: bool,
    pub note: Option<String>,
}

/// The full registry in stable (derivation) order.
pub fn registry() -> &'static [CheckDef] {
    static REGISTRY: OnceLock<Vec<CheckDef>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut r = Vec::new();
        theorems::register(&mut r);
        lemmas::register(&mut r);
        weighted::register(&mut r);
        difference::register(&mut r);
        facts::register(&mut r);
        gamma::register(&mut r);
        r
    })
}

/// Position of a check in the registry (used for stable report ordering).
pub fn registry_index(id: &str) -> Option<usize> {
    registry().iter().position(|c| c.id == id)
}

pub fn find_check(id: &str) -> Result<&'static CheckDef, Error> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Run one check at one prime with a fresh cache and the default seed.
pub fn run_check(id: &str, p: u64) -> Result<CheckResult, Error> {
    let cache = SequenceCache::new();
    run_check_with(id, p, &cache, crate::rng::DEFAULT_SEED)
}

/// Run one check against a shared cache (the sweep path).
pub fn run_check_with(
    id: &str,
    p: u64,
    cache: &SequenceCache,
    seed: u64,
) -> Result<CheckResult, Error> {
    let def = find_check(id)?;
    if !def.applicability.admits(p) {
        return Err(Error::NotApplicable {
            check: id.to_string(),
            p,
            requires: def.applicability.describe(),
        });
    }
    let rep = if def.uses_representation { Some(represent(p)?) } else { None };
    let ctx = CheckCtx { p, cache, rep, seed: SplitMix64::keyed(seed, def.id, p).next_u64() };
    Ok(evaluate(def, &ctx))
}

/// Run one check with an explicit (possibly non-canonical) representation.
/// Lets tests confirm that x-dependent checks genuinely consume x: feeding
/// the sign-flipped representation must break them somewhere.
pub fn run_check_with_representation(
    id: &str,
    p: u64,
    cache: &SequenceCache,
    seed: u64,
    rep: PrimeRepresentation,
) -> Result<CheckResult, Error> {
    let def = find_check(id)?;
    if !def.applicability.admits(p) {
        return Err(Error::NotApplicable {
            check: id.to_string(),
            p,
            requires: def.applicability.describe(),
        });
    }
    let ctx = CheckCtx {
        p,
        cache,
        rep: Some(rep),
        seed: SplitMix64::keyed(seed, def.id, p).next_u64(),
    };
    Ok(evaluate(def, &ctx))
}

/// Reduce every instance and fold into one result. The first failing
/// instance determines the reported residues; otherwise the first instance
/// is shown as a witness.
fn evaluate(def: &'static CheckDef, ctx: &CheckCtx) -> CheckResult {
    let eval = (def.eval)(ctx);
    let p = ctx.p;
    let mut witness: Option<(String, String, u64)> = None;
    let mut failure: Option<(String, String, String, u64)> = None;

    for inst in &eval.instances {
        let k = inst.k_override.unwrap_or(def.modulus_exponent);
        let m = prime_power(p, k);
        let ra = reduce_mod_pk(&inst.lhs, p, k);
        let rb = reduce_mod_pk(&inst.rhs, p, k);
        let (ls, rs) = (
            ra.as_ref().map(|r| r.residue.to_string()).unwrap_or_default(),
            rb.as_ref().map(|r| r.residue.to_string()).unwrap_or_default(),
        );
        let pass = if inst.exact {
            inst.lhs == inst.rhs
        } else {
            matches!((&ra, &rb), (Ok(a), Ok(b)) if a.residue == b.residue)
        };
        if witness.is_none() {
            witness = Some((ls.clone(), rs.clone(), m));
        }
        if !pass {
            failure = Some((inst.label.clone(), ls, rs, m));
            break;
        }
    }

    let pass = failure.is_none();
    let mut note_parts: Vec<String> = Vec::new();
    if let Some((label, _, _, _)) = &failure {
        note_parts.push(format!("failed at {label}"));
    }
    if let Some(n) = eval.note {
        note_parts.push(n);
    }
    let (lhs, rhs, modulus) = match failure {
        Some((_, l, r, m)) => (l, r, m),
        None => witness.unwrap_or_default(),
    };
    let modulus = if modulus == 0 { prime_power(p, def.modulus_exponent) } else { modulus };

    CheckResult {
        check: def.id,
        p,
        x: ctx.rep.map(|r| r.x),
        y: ctx.rep.map(|r| r.y),
        lhs,
        rhs,
        modulus,
        pass,
        note: if note_parts.is_empty() { None } else { Some(note_parts.join("; ")) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_stable_and_large() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        assert!(ids.len() >= 30, "registry holds {} checks", ids.len());
        assert!(ids.contains(&"CHK-THM11A"));
        assert!(ids.contains(&"CHK-FP2"));
        assert!(ids.contains(&"CHK-WOLST"));
        // no duplicate ids
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
    }

    #[test]
    fn not_applicable_is_an_error_not_a_failure() {
        match run_check("CHK-FP2", 5) {
            Err(Error::NotApplicable { check, p, .. }) => {
                assert_eq!(check, "CHK-FP2");
                assert_eq!(p, 5);
            }
            other => panic!("expected NotApplicable, got {other:?}"),
        }
        assert!(matches!(run_check("CHK-NOPE", 7), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn fp2_frozen_example() {
        let r = run_check("CHK-FP2", 7).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "10");
        assert_eq!(r.rhs, "10");
        assert_eq!(r.modulus, 49);
        assert_eq!(r.x, Some(-2));
        assert_eq!(r.y, Some(1));
    }

    #[test]
    fn thm11a_frozen_example() {
        let r = run_check("CHK-THM11A", 7).unwrap();
        assert!(r.pass);
        assert_eq!(r.rhs, "41"); // 4x mod 49 with x = -2
    }
}
