//! Full-registry sweeps at small primes, frozen-residue spot checks, and the
//! representation-sensitivity guard.

use franel::checks::{registry, run_check, run_check_with_representation};
use franel::rng::DEFAULT_SEED;
use franel::sweep::sweep;
use franel::{PrimeRepresentation, SequenceCache};

/// Every check passes at every applicable prime in [7, 60] — except the
/// derivative closed form, which is recorded failing with its diagnosis.
#[test]
fn whole_registry_passes_at_small_primes() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let report = sweep(&ids, 7, 60, 4).unwrap();
    assert!(!report.results.is_empty());
    for r in &report.results {
        if r.check == "CHK-GAMMA-DERIV" {
            assert!(!r.pass, "derivative closed form unexpectedly passed at p={}", r.p);
            let note = r.note.as_deref().unwrap_or("");
            assert!(note.contains("uniform offset"), "p={} note: {note}", r.p);
        } else {
            assert!(
                r.pass,
                "{} failed at p={}: lhs={} rhs={} mod={} note={:?}",
                r.check, r.p, r.lhs, r.rhs, r.modulus, r.note
            );
        }
    }
    assert!(!report.all_pass, "the recorded derivative failure must surface");
    let deriv = &report.summary["CHK-GAMMA-DERIV"];
    assert_eq!(deriv.pass, 0);
    assert!(deriv.fail > 0);
}

/// Residues frozen from an independent implementation.
#[test]
fn frozen_residues() {
    for (id, p, lhs, modulus) in [
        ("CHK-S1", 13u64, "147", 169u64),
        ("CHK-FP2", 13, "80", 169),
        ("CHK-THM12", 13, "925", 2197),
        ("CHK-EASY", 13, "0", 13),
        ("CHK-S1", 31, "674", 961),
        ("CHK-FP2", 31, "244", 961),
        ("CHK-THM12", 31, "8893", 29791),
        ("CHK-EASY", 31, "27", 31),
    ] {
        let r = run_check(id, p).unwrap();
        assert!(r.pass, "{id} at p={p}");
        assert_eq!(r.lhs, lhs, "{id} at p={p} lhs");
        assert_eq!(r.rhs, lhs, "{id} at p={p} rhs");
        assert_eq!(r.modulus, modulus, "{id} at p={p} modulus");
    }
}

/// Feeding the sign-flipped representation must break every x-dependent
/// check for at least one prime in [7, 100]: the evaluators really consume x.
#[test]
fn flipped_representation_breaks_x_checks() {
    let cache = SequenceCache::new();
    for def in registry().iter().filter(|c| c.uses_representation) {
        let mut flipped_somewhere = false;
        for p in franel::primes::primes_1_mod_3(7, 100) {
            let honest = run_check(def.id, p).unwrap();
            assert!(honest.pass, "{} at p={p} with the canonical x", def.id);
            let rep = franel::quadform::represent(p).unwrap();
            let flipped = PrimeRepresentation { x: -rep.x, ..rep };
            let r =
                run_check_with_representation(def.id, p, &cache, DEFAULT_SEED, flipped).unwrap();
            if !r.pass {
                flipped_somewhere = true;
                break;
            }
        }
        assert!(flipped_somewhere, "{} never notices a sign-flipped x", def.id);
    }
}
