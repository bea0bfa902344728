//! Standalone combinatorial facts the chains lean on: central-binomial
//! divisibility, the reflected product, second-order harmonic antisymmetry,
//! the signed-quarter binomial ratio, and the shifted-harmonic scan.

use super::util::{binom, int, rsum};
use super::{Applicability, CheckCtx, CheckDef, CheckEval, Instance};
use crate::padic::congruent;
use crate::rational::ExactRational;

pub(super) fn register(r: &mut Vec<CheckDef>) {
    r.push(CheckDef {
        id: "CHK-CENTRALBIN",
        statement: "C(2k,k) = 0 (mod p) for every k in ((p-1)/2, p)",
        modulus_exponent: 1,
        applicability: Applicability::Gt3,
        uses_representation: false,
        eval: centralbin,
    });
    r.push(CheckDef {
        id: "CHK-JBIN2P",
        statement: "j C(2j,j) C(2p-2j, p-j) = 2p (mod p^2) for every j in ((p-1)/2, p)",
        modulus_exponent: 2,
        applicability: Applicability::Gt3,
        uses_representation: false,
        eval: jbin2p,
    });
    r.push(CheckDef {
        id: "CHK-H2SYM",
        statement: "H^(2)_{p-1-k} = -H^(2)_k (mod p) for every k < p; the orientation of the \
                    sign is essential",
        modulus_exponent: 1,
        applicability: Applicability::Gt3,
        uses_representation: false,
        eval: h2sym,
    });
    r.push(CheckDef {
        id: "CHK-RATBIN",
        statement: "C(2k,k)/(-4)^k = C((p-1)/2, k) / (1 - p sum_{j<=k} 1/(2j-1)) (mod p^2) \
                    for every k <= (p-1)/2",
        modulus_exponent: 2,
        applicability: Applicability::Gt3,
        uses_representation: false,
        eval: ratbin,
    });
    r.push(CheckDef {
        id: "CHK-HSHIFT6",
        statement: "H_{(p-1)/6} - sum_{k<=(p-1)/6} 1/(k+r) = -sum_{k<=r} 1/(k(6k-1)) (mod p) \
                    for every shift r, with both sides leaving Z_p at exactly the same r",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: hshift6,
    });
    r.push(CheckDef {
        id: "CHK-HSHIFT2",
        statement: "H_{(p-1)/2} - sum_{k<=(p-1)/2} 1/(k+r) = -sum_{k<=r} 1/(k(2k-1)) (mod p) \
                    for every shift r, with both sides leaving Z_p at exactly the same r",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: hshift2,
    });
}

fn centralbin(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let instances = ((p + 1) / 2..p)
        .map(|k| Instance::cong(format!("k={k}"), binom(2 * k as i64, k as i64), int(0)))
        .collect();
    CheckEval::new(instances)
}

fn jbin2p(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let pi = p as i64;
    let instances = ((p + 1) / 2..p)
        .map(|j| {
            let ji = j as i64;
            let lhs = int(ji) * binom(2 * ji, ji) * binom(2 * pi - 2 * ji, pi - ji);
            Instance::cong(format!("j={j}"), lhs, int(2 * pi))
        })
        .collect();
    CheckEval::new(instances)
}

fn h2sym(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let mut instances = Vec::with_capacity(p as usize + 1);
    let mut plain_mismatch = 0u64;
    for k in 0..p {
        let hi = ctx.h2(p - 1 - k);
        let lo = ctx.h2(k);
        if !congruent(&hi, &lo, p, 1).unwrap_or(false) {
            plain_mismatch += 1;
        }
        instances.push(Instance::cong(format!("k={k}"), hi, -lo));
    }
    // the unsigned mirror claim must break somewhere, or the sign carries no
    // content
    instances.push(Instance::exact(
        "orientation matters",
        int((plain_mismatch > 0) as i64),
        int(1),
    ));
    CheckEval::with_note(
        instances,
        format!("sign-free mirror claim fails at {plain_mismatch} of {p} positions"),
    )
}

fn ratbin(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let m = (p - 1) / 2;
    let mut instances = Vec::with_capacity(m as usize + 1);
    let mut odd_harmonic = ExactRational::zero();
    let mut pow = ExactRational::one();
    for k in 0..=m {
        if k > 0 {
            odd_harmonic += ExactRational::new(1, 2 * k as i64 - 1);
            pow *= &ExactRational::new(-1, 4);
        }
        let lhs = binom(2 * k as i64, k as i64) * &pow;
        let rhs = binom(m as i64, k as i64)
            / (int(1) - int(p as i64) * &odd_harmonic);
        instances.push(Instance::cong(format!("k={k}"), lhs, rhs));
    }
    CheckEval::new(instances)
}

/// Shared scan for the two shifted-harmonic identities: length m, family
/// constant c. Walks every shift r in 1..p incrementally, checks congruence
/// where both sides live in Z_p, and demands that poles occur on both sides
/// simultaneously — the count of polar shifts is itself pinned.
fn hshift_scan(ctx: &CheckCtx, m: u64, c: u64) -> CheckEval {
    let p = ctx.p;
    let nonintegral = |q: &ExactRational| q.valuation(p).is_some_and(|v| v < 0);

    let h_m = ctx.h(m);
    // shifted = sum_{k=1}^m 1/(k+r), maintained incrementally over r
    let mut shifted = rsum(1, m, |k| ExactRational::new(1, (k + 1) as i64));
    let mut rhs = -ExactRational::new(1, (c - 1) as i64);
    let mut instances = Vec::new();
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut unpaired = 0u64;

    for r in 1..p {
        if r > 1 {
            shifted -= &ExactRational::new(1, r as i64);
            shifted += ExactRational::new(1, (m + r) as i64);
            rhs -= &ExactRational::new(1, (r * (c * r - 1)) as i64);
        }
        let lhs = &h_m - &shifted;
        match (nonintegral(&lhs), nonintegral(&rhs)) {
            (false, false) => {
                checked += 1;
                instances.push(Instance::cong(format!("r={r}"), lhs, rhs.clone()));
            }
            (true, true) => skipped += 1,
            _ => {
                unpaired += 1;
                instances.push(Instance::exact(
                    format!("pole pairing at r={r}"),
                    int(0),
                    int(1),
                ));
            }
        }
    }

    let expected_polar = p - (((c - 1) * p + 1) / c);
    instances.push(Instance::exact("polar shift count", int(skipped as i64), int(expected_polar as i64)));
    CheckEval::with_note(
        instances,
        format!(
            "checked {checked} shifts, {skipped} polar on both sides, {unpaired} unpaired poles"
        ),
    )
}

fn hshift6(ctx: &CheckCtx) -> CheckEval {
    hshift_scan(ctx, (ctx.p - 1) / 6, 6)
}

fn hshift2(ctx: &CheckCtx) -> CheckEval {
    hshift_scan(ctx, (ctx.p - 1) / 2, 2)
}

#[cfg(test)]
mod tests {
    use crate::checks::run_check;

    #[test]
    fn facts_hold_at_small_primes() {
        for id in ["CHK-CENTRALBIN", "CHK-JBIN2P", "CHK-H2SYM", "CHK-RATBIN"] {
            for p in [5, 7, 11, 13, 29] {
                let r = run_check(id, p).unwrap();
                assert!(r.pass, "{id} at p={p}: {:?}", r.note);
            }
        }
    }

    #[test]
    fn shift_scan_counts_polar_positions() {
        // polar shift counts for the sixth-length family at 7, 13, 19, 31
        for (p, want) in [(7u64, "1"), (13, "2"), (19, "3"), (31, "5")] {
            let r = run_check("CHK-HSHIFT6", p).unwrap();
            assert!(r.pass, "p={p}: {:?}", r.note);
            assert!(
                r.note.as_deref().unwrap_or("").contains(&format!(", {want} polar")),
                "p={p} note: {:?}",
                r.note
            );
        }
        for (p, want) in [(7u64, "3"), (13, "6"), (19, "9"), (31, "15")] {
            let r = run_check("CHK-HSHIFT2", p).unwrap();
            assert!(r.pass, "p={p}: {:?}", r.note);
            assert!(
                r.note.as_deref().unwrap_or("").contains(&format!(", {want} polar")),
                "p={p} note: {:?}",
                r.note
            );
        }
    }
}
