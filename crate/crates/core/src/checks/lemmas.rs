//! Binomial-product lemmas mod p^3 and the harmonic-number evaluation
//! battery they lean on.

use super::util::{binom, int, sign};
use super::{Applicability, CheckCtx, CheckDef, CheckEval, Instance};
use crate::comb::fermat_quotient;
use crate::rational::ExactRational;

pub(super) fn register(r: &mut Vec<CheckDef>) {
    r.push(CheckDef {
        id: "CHK-LEM22",
        statement: "C(3j,j) C(p+j,3j+1) = p/(3j+1) (1 - p H_{2j} + p H_j) (mod p^3) \
                    for 0 <= j <= (p-1)/2, j != (p-1)/3",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: lem22,
    });
    r.push(CheckDef {
        id: "CHK-P2J-LOW",
        statement: "C(3j,j) C(p+2j,3j+1) = p(-1)^j/(3j+1) (1 + p H_{2j} - p H_j) (mod p^3) \
                    for 0 <= j <= (p-1)/2, j != (p-1)/3",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: p2j_low,
    });
    r.push(CheckDef {
        id: "CHK-P2J-HIGH",
        statement: "C(3j,j) C(p+2j,3j+1) = 2p(-1)^j/(3j+1) (mod p^2) for (p+1)/2 <= j <= p-1",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: p2j_high,
    });
    r.push(CheckDef {
        id: "CHK-MPT",
        statement: "C((p-1)/2 + pt, (p-1)/3) = C((p-1)/2,(p-1)/3) (1 + pt(H_{(p-1)/2} - H_{(p-1)/6})) \
                    (mod p^2) for t in {0,1,2,3,(p-1)/2}",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: mpt,
    });
    register_harmonic_battery(r);
}

fn lem22(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let mut inst = Vec::new();
    for j in 0..=m {
        if j == t3 {
            continue;
        }
        let ji = j as i64;
        let lhs = binom(3 * ji, ji) * binom(p as i64 + ji, 3 * ji + 1);
        let rhs = ExactRational::new(p as i64, 3 * ji + 1)
            * (int(1) - int(p as i64) * ctx.h(2 * j) + int(p as i64) * ctx.h(j));
        inst.push(Instance::cong(format!("j={j}"), lhs, rhs));
    }
    CheckEval::new(inst)
}

fn p2j_low(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let mut inst = Vec::new();
    for j in 0..=m {
        if j == t3 {
            continue;
        }
        let ji = j as i64;
        let lhs = binom(3 * ji, ji) * binom(p as i64 + 2 * ji, 3 * ji + 1);
        let rhs = ExactRational::new(p as i64, 3 * ji + 1)
            * sign(j)
            * (int(1) + int(p as i64) * ctx.h(2 * j) - int(p as i64) * ctx.h(j));
        inst.push(Instance::cong(format!("j={j}"), lhs, rhs));
    }
    CheckEval::new(inst)
}

fn p2j_high(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let mut inst = Vec::new();
    for j in (p + 1) / 2..p {
        let ji = j as i64;
        let lhs = binom(3 * ji, ji) * binom(p as i64 + 2 * ji, 3 * ji + 1);
        let rhs = ExactRational::new(2 * p as i64, 3 * ji + 1) * sign(j);
        inst.push(Instance::cong(format!("j={j}"), lhs, rhs));
    }
    CheckEval::new(inst)
}

fn mpt(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3, t6) = ((p - 1) / 2, (p - 1) / 3, (p - 1) / 6);
    let base = binom(m as i64, t3 as i64);
    let hh = ctx.h(m) - ctx.h(t6);
    let inst = [0, 1, 2, 3, m]
        .into_iter()
        .map(|t| {
            let top = ExactRational::from_int((m + p * t) as i64);
            let lhs = crate::comb::binomial_rat(&top, t3);
            let rhs = &base * &(int(1) + int((p * t) as i64) * &hh);
            Instance::cong(format!("t={t}"), lhs, rhs)
        })
        .collect();
    CheckEval::new(inst)
}

// ---------------------------------------------------------------------------
// harmonic evaluation battery

/// q_a = (a^(p-1) - 1)/p, panicking only if p divides a (excluded by
/// applicability).
fn q(a: i64, p: u64) -> ExactRational {
    fermat_quotient(a, p).expect("base coprime to p under applicability")
}

/// (p/3)-signed Bernoulli-polynomial value at the third-point, the constant
/// the sixth/third-length harmonic sums evaluate to.
fn b3(ctx: &CheckCtx) -> ExactRational {
    super::util::b_third_signed(ctx)
}

fn register_harmonic_battery(r: &mut Vec<CheckDef>) {
    r.push(CheckDef {
        id: "CHK-SUNH-H2FULL",
        statement: "H^(2)_{p-1} = 0 (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::Gt3,
        uses_representation: false,
        eval: |ctx| CheckEval::new(vec![Instance::cong("full range", ctx.h2(ctx.p - 1), int(0))]),
    });
    r.push(CheckDef {
        id: "CHK-SUNH-H2HALF",
        statement: "H^(2)_{(p-1)/2} = 0 (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::Gt3,
        uses_representation: false,
        eval: |ctx| {
            CheckEval::new(vec![Instance::cong("half range", ctx.h2((ctx.p - 1) / 2), int(0))])
        },
    });
    r.push(CheckDef {
        id: "CHK-WOLST",
        statement: "H_{p-1} = 0 (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::Ge5,
        uses_representation: false,
        eval: |ctx| CheckEval::new(vec![Instance::cong("full range", ctx.h(ctx.p - 1), int(0))]),
    });
    r.push(CheckDef {
        id: "CHK-SUNH-H2SIXTHIRD",
        statement: "(1/5) H^(2)_{floor(p/6)} and H^(2)_{floor(p/3)} both equal \
                    (1/2)(p/3)B_{p-2}(1/3) (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::Gt5,
        uses_representation: false,
        eval: |ctx| {
            let target = ExactRational::new(1, 2) * b3(ctx);
            CheckEval::new(vec![
                Instance::cong(
                    "sixth-length",
                    ExactRational::new(1, 5) * ctx.h2(ctx.p / 6),
                    target.clone(),
                ),
                Instance::cong("third-length", ctx.h2(ctx.p / 3), target),
            ])
        },
    });
    r.push(CheckDef {
        id: "CHK-SUNH-H6",
        statement: "H_{floor(p/6)} = -2 q_2 - (3/2) q_3 + p q_2^2 + (3p/4) q_3^2 \
                    - (5p/12)(p/3)B_{p-2}(1/3) (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::Gt5,
        uses_representation: false,
        eval: |ctx| {
            let p = ctx.p as i64;
            let (q2, q3) = (q(2, ctx.p), q(3, ctx.p));
            let rhs = int(-2) * &q2 - ExactRational::new(3, 2) * &q3
                + int(p) * &q2 * &q2
                + ExactRational::new(3 * p, 4) * &q3 * &q3
                - ExactRational::new(5 * p, 12) * b3(ctx);
            CheckEval::new(vec![Instance::cong("sixth-length", ctx.h(ctx.p / 6), rhs)])
        },
    });
    r.push(CheckDef {
        id: "CHK-SUNH-H3",
        statement: "H_{floor(p/3)} = -(3/2) q_3 + (3p/4) q_3^2 - (p/6)(p/3)B_{p-2}(1/3) (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::Gt5,
        uses_representation: false,
        eval: |ctx| {
            let p = ctx.p as i64;
            let q3 = q(3, ctx.p);
            let rhs = ExactRational::new(-3, 2) * &q3
                + ExactRational::new(3 * p, 4) * &q3 * &q3
                - ExactRational::new(p, 6) * b3(ctx);
            CheckEval::new(vec![Instance::cong("third-length", ctx.h(ctx.p / 3), rhs)])
        },
    });
    r.push(CheckDef {
        id: "CHK-SUNH-HHALF",
        statement: "H_{(p-1)/2} = -2 q_2 + p q_2^2 (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::Gt3,
        uses_representation: false,
        eval: |ctx| {
            let q2 = q(2, ctx.p);
            let rhs = int(-2) * &q2 + int(ctx.p as i64) * &q2 * &q2;
            CheckEval::new(vec![Instance::cong("half-length", ctx.h((ctx.p - 1) / 2), rhs)])
        },
    });
    r.push(CheckDef {
        id: "CHK-SUNH-H2QUARTER",
        statement: "H^(2)_{floor(p/4)} = (-1)^((p-1)/2) * 4 E_{p-3} (mod p), E the \
                    even-index alternating-permutation numbers",
        modulus_exponent: 1,
        applicability: Applicability::Gt3,
        uses_representation: false,
        eval: |ctx| {
            let e = ExactRational::from_bigint(ctx.cache.euler(ctx.p - 3));
            let rhs = sign((ctx.p - 1) / 2) * int(4) * e;
            CheckEval::new(vec![Instance::cong("quarter-length", ctx.h2(ctx.p / 4), rhs)])
        },
    });
    r.push(CheckDef {
        id: "CHK-SUNH-H23",
        statement: "H_{floor(2p/3)} = -(3/2) q_3 + (3p/4) q_3^2 + (p/3)(p/3)B_{p-2}(1/3) (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::Gt5,
        uses_representation: false,
        eval: |ctx| {
            let p = ctx.p as i64;
            let q3 = q(3, ctx.p);
            let rhs = ExactRational::new(-3, 2) * &q3
                + ExactRational::new(3 * p, 4) * &q3 * &q3
                + ExactRational::new(p, 3) * b3(ctx);
            CheckEval::new(vec![Instance::cong(
                "two-thirds-length",
                ctx.h(2 * ctx.p / 3),
                rhs,
            )])
        },
    });
}
