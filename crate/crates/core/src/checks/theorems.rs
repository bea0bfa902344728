//! Headline congruences for the cubed-binomial sums at p = x^2 + 3y^2.

use super::util::{franel_weighted_sum, int};
use super::{Applicability, CheckCtx, CheckDef, CheckEval, Instance};
use crate::rational::ExactRational;

pub(super) fn register(r: &mut Vec<CheckDef>) {
    r.push(CheckDef {
        id: "CHK-FP2",
        statement: "sum_{k<p} f_k/2^k and sum_{k<p} f_k/(-4)^k are both 2x - p/(2x) mod p^2, \
                    where f_k = sum C(k,i)^3 and p = x^2 + 3y^2 with x = 1 (mod 3)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: fp2,
    });
    r.push(CheckDef {
        id: "CHK-THM11A",
        statement: "sum_{k<p} (3k+4) f_k/2^k = 4x (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: thm11a,
    });
    r.push(CheckDef {
        id: "CHK-THM11B",
        statement: "sum_{k<p} (3k+2) f_k/(-4)^k = 2x (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: thm11b,
    });
    r.push(CheckDef {
        id: "CHK-THM12",
        statement: "sum_{k<p} f_k/2^k = sum_{k<p} f_k/(-4)^k (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: thm12,
    });
}

fn fp2(ctx: &CheckCtx) -> CheckEval {
    let x = ctx.x();
    let rhs = int(2 * x) - ExactRational::new(ctx.p as i64, 2 * x);
    let lhs2 = franel_weighted_sum(ctx.cache, ctx.p, 2, |_| 1);
    let lhs4 = franel_weighted_sum(ctx.cache, ctx.p, -4, |_| 1);
    CheckEval::new(vec![
        Instance::cong("base 2", lhs2, rhs.clone()),
        Instance::cong("base -4", lhs4, rhs),
    ])
}

fn thm11a(ctx: &CheckCtx) -> CheckEval {
    let lhs = franel_weighted_sum(ctx.cache, ctx.p, 2, |k| 3 * k as i64 + 4);
    CheckEval::new(vec![Instance::cong("weighted sum", lhs, int(4 * ctx.x()))])
}

fn thm11b(ctx: &CheckCtx) -> CheckEval {
    let lhs = franel_weighted_sum(ctx.cache, ctx.p, -4, |k| 3 * k as i64 + 2);
    CheckEval::new(vec![Instance::cong("weighted sum", lhs, int(2 * ctx.x()))])
}

fn thm12(ctx: &CheckCtx) -> CheckEval {
    let lhs = franel_weighted_sum(ctx.cache, ctx.p, 2, |_| 1);
    let rhs = franel_weighted_sum(ctx.cache, ctx.p, -4, |_| 1);
    CheckEval::new(vec![Instance::cong("two weightings", lhs, rhs)])
}
