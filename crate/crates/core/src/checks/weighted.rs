//! The derivation chain for the linearly-weighted sums: from the exact
//! sigma-form rewrites down to the closed forms in x and the Fermat
//! quotient of 3.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::util::{binom, franel_weighted_sum, int, ipow, lcm_upto, rsum, sign};
use super::{Applicability, CheckCtx, CheckDef, CheckEval, Instance};
use crate::comb::{binomial_rat, fermat_quotient, rising_factorial};
use crate::rational::ExactRational;

pub(super) fn register(r: &mut Vec<CheckDef>) {
    r.push(CheckDef {
        id: "CHK-MAIN1",
        statement: "sum (3k+4) f_k/2^k rewrites exactly through the sigma-form and reduces to \
                    p sum_{j<=(p-1)/2} C(2j,j)/4^j (9j+5)/((3j+1)(3j+2)) (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: main1,
    });
    r.push(CheckDef {
        id: "CHK-EQU",
        statement: "the reduced (9j+5) sum splits as S1 + S2 (mod p^2), S1 the alternating \
                    C((p-1)/2,j) form, S2 the boundary term",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: equ,
    });
    r.push(CheckDef {
        id: "CHK-4P",
        statement: "4p/(3p-1) * (1)_m/((1/3)_m) = 4x + 3px q_3 - p/x (mod p^2), m=(p-1)/2",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: fourp,
    });
    r.push(CheckDef {
        id: "CHK-2P",
        statement: "2p/(3p+1) * (1)_m/((2/3)_m) = p/x (mod p^2), m=(p-1)/2",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: twop,
    });
    r.push(CheckDef {
        id: "CHK-S1",
        statement: "S1 equals its Pochhammer form exactly and S1 = 4x + 3px q_3 (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: s1,
    });
    r.push(CheckDef {
        id: "CHK-S2",
        statement: "S2 = -3px q_3 (mod p^2), via the C(-1/2,(p-1)/3) link and the \
                    harmonic-difference link",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: s2,
    });
    r.push(CheckDef {
        id: "CHK-3K2FK",
        statement: "sum (3k+2) f_k/(-4)^k equals its sigma-form exactly (a rational identity, \
                    no reduction)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: threek2fk,
    });
    r.push(CheckDef {
        id: "CHK-MAIN2",
        statement: "sum (3k+2) f_k/(-4)^k = p sum C(m,j)(-1)^j (1/(3j+1) - 1/(3j+2)) + S3 \
                    (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: main2,
    });
    r.push(CheckDef {
        id: "CHK-3J13J2",
        statement: "p sum C(m,j)(-1)^j (1/(3j+1) - 1/(3j+2)) = 2x + (3px/2) q_3 - 3p/(2x) \
                    (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: threej13j2,
    });
    r.push(CheckDef {
        id: "CHK-S3",
        statement: "S3 = -(3px/2) q_3 + 3p/(2x) (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: s3,
    });
    r.push(CheckDef {
        id: "CHK-NEGHALF",
        statement: "C(-1/2, 2(p-1)/3) = -3p(-1)^((p-1)/2) / C(2(p-1)/3, (p-1)/2) (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: neghalf,
    });
    r.push(CheckDef {
        id: "CHK-2P3P",
        statement: "2p/(3p-1) * (1)_m/((1/3)_m) = C(m,(p-1)/3) = 2x (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: twop3p,
    });
}

fn q3(p: u64) -> ExactRational {
    fermat_quotient(3, p).expect("p > 3")
}

/// S1 = p sum_j C(m,j)(-1)^j (2/(3j+1) + 1/(3j+2)).
fn s1_sum(p: u64) -> ExactRational {
    let m = (p - 1) / 2;
    int(p as i64)
        * rsum(0, m, |j| {
            let ji = j as i64;
            binom(m as i64, ji)
                * sign(j)
                * (ExactRational::new(2, 3 * ji + 1) + ExactRational::new(1, 3 * ji + 2))
        })
}

/// S2 = (3p+2)/(p+1) * (C(2(p-1)/3, (p-1)/3)/4^((p-1)/3) - C(m, (p-1)/3)).
fn s2_term(p: u64) -> ExactRational {
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let m23 = 2 * (p - 1) / 3;
    ExactRational::new(3 * p as i64 + 2, p as i64 + 1)
        * (binom(m23 as i64, t3 as i64) / ipow(4, t3 as u32) - binom(m as i64, t3 as i64))
}

/// The two Pochhammer-quotient building blocks: (1)_m/((1/3)_m) and
/// (1)_m/((2/3)_m) with their prefactors.
fn poch_block(p: u64, third_numer: i64) -> ExactRational {
    let m = (p - 1) / 2;
    let one = ExactRational::one();
    let base = ExactRational::new(third_numer, 3);
    rising_factorial(&one, m) / rising_factorial(&base, m)
}

fn main1(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let m = (p - 1) / 2;
    let lhs = franel_weighted_sum(ctx.cache, p, 2, |k| 3 * k as i64 + 4);
    let sigma = rsum(0, m, |j| {
        let ji = j as i64;
        let pi = p as i64;
        binom(2 * ji, ji) * binom(3 * ji, ji) / ipow(4, j as u32)
            * ExactRational::new(9 * pi * ji + 3 * pi + 9 * ji + 5, 3 * ji + 2)
            * binom(pi + ji, 3 * ji + 1)
    });
    let reduced = int(p as i64)
        * rsum(0, m, |j| {
            let ji = j as i64;
            binom(2 * ji, ji) / ipow(4, j as u32)
                * ExactRational::new(9 * ji + 5, (3 * ji + 1) * (3 * ji + 2))
        });
    CheckEval::new(vec![
        Instance::exact("sigma-form rewrite", lhs.clone(), sigma),
        Instance::cong("reduction mod p^2", lhs, reduced),
    ])
}

fn equ(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let m = (p - 1) / 2;
    let reduced = int(p as i64)
        * rsum(0, m, |j| {
            let ji = j as i64;
            binom(2 * ji, ji) / ipow(4, j as u32)
                * ExactRational::new(9 * ji + 5, (3 * ji + 1) * (3 * ji + 2))
        });
    let split = s1_sum(p) + s2_term(p);
    CheckEval::new(vec![Instance::cong("S1 + S2 split", reduced, split)])
}

fn fourp(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p as i64;
    let x = ctx.x();
    let lhs = ExactRational::new(4 * p, 3 * p - 1) * poch_block(ctx.p, 1);
    let rhs = int(4 * x) + int(3 * p * x) * q3(ctx.p) - ExactRational::new(p, x);
    CheckEval::new(vec![Instance::cong("Pochhammer quotient", lhs, rhs)])
}

fn twop(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p as i64;
    let lhs = ExactRational::new(2 * p, 3 * p + 1) * poch_block(ctx.p, 2);
    let rhs = ExactRational::new(p, ctx.x());
    CheckEval::new(vec![Instance::cong("Pochhammer quotient", lhs, rhs)])
}

fn s1(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p as i64;
    let x = ctx.x();
    let lhs = s1_sum(ctx.p);
    let poch = ExactRational::new(4 * p, 3 * p - 1) * poch_block(ctx.p, 1)
        + ExactRational::new(2 * p, 3 * p + 1) * poch_block(ctx.p, 2);
    let closed = int(4 * x) + int(3 * p * x) * q3(ctx.p);
    CheckEval::new(vec![
        Instance::exact("Pochhammer rewrite", lhs.clone(), poch),
        Instance::cong("closed form", lhs, closed),
    ])
}

fn s2(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3, t6) = ((p - 1) / 2, (p - 1) / 3, (p - 1) / 6);
    let lhs = s2_term(p);
    let half = ExactRational::new(-1, 2);
    let link1 = int(2) * (binomial_rat(&half, t3) - binom(m as i64, t3 as i64));
    let link2 =
        int(-(p as i64)) * binom(m as i64, t3 as i64) * (ctx.h(m) - ctx.h(t6));
    let closed = int(-3 * p as i64 * ctx.x()) * q3(p);
    CheckEval::new(vec![
        Instance::cong("closed form", lhs.clone(), closed),
        Instance::cong("shifted-binomial link", lhs.clone(), link1),
        Instance::cong("harmonic-difference link", lhs, link2),
    ])
}

fn threek2fk(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let lhs = franel_weighted_sum(ctx.cache, p, -4, |k| 3 * k as i64 + 2);
    // C(3j,j) and C(p+2j,3j+1) carried as integer ladders; the 1/(3j+2)
    // factors are cleared through L = lcm(1..=3p) and the (-4)^j weights by
    // Horner accumulation, so the sum reduces once at the end.
    let sigma = {
        let l = lcm_upto(3 * p);
        let mut c3 = BigInt::one(); // C(3j, j)
        let mut cp2 = BigInt::from(p); // C(p + 2j, 3j + 1)
        let mut acc = BigInt::zero(); // running sum scaled by L * (-4)^(p-1-j)
        for j in 0..=p - 1 {
            if j > 0 {
                c3 = c3 * ((3 * j - 2) * (3 * j - 1) * (3 * j)) / (j * (2 * j - 1) * (2 * j));
                cp2 = cp2 * ((p + 2 * j - 1) * (p + 2 * j) * (p - j))
                    / ((3 * j - 1) * (3 * j) * (3 * j + 1));
            }
            acc = acc * -4
                + ctx.cache.central_binomial(j)
                    * &c3
                    * &cp2
                    * (9 * p * j + 3 * p + 1)
                    * (&l / (3 * j + 2));
        }
        let mut den = &l * (BigInt::one() << (2 * (p - 1) as usize));
        if (p - 1) % 2 == 1 {
            den = -den;
        }
        ExactRational::new(acc, den)
    };
    CheckEval::new(vec![Instance::exact("sigma-form rewrite", lhs, sigma)])
}

/// S3 = (C(-1/2,t3) - C(m,t3))/(p+1) - C(-1/2, 2(p-1)/3).
fn s3_term(p: u64) -> ExactRational {
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let m23 = 2 * (p - 1) / 3;
    let half = ExactRational::new(-1, 2);
    ExactRational::new(1, p as i64 + 1) * (binomial_rat(&half, t3) - binom(m as i64, t3 as i64))
        - binomial_rat(&half, m23)
}

/// p sum C(m,j)(-1)^j (1/(3j+1) - 1/(3j+2)).
fn main2_sum(p: u64) -> ExactRational {
    let m = (p - 1) / 2;
    int(p as i64)
        * rsum(0, m, |j| {
            let ji = j as i64;
            binom(m as i64, ji)
                * sign(j)
                * (ExactRational::new(1, 3 * ji + 1) - ExactRational::new(1, 3 * ji + 2))
        })
}

fn main2(ctx: &CheckCtx) -> CheckEval {
    let lhs = franel_weighted_sum(ctx.cache, ctx.p, -4, |k| 3 * k as i64 + 2);
    let rhs = main2_sum(ctx.p) + s3_term(ctx.p);
    CheckEval::new(vec![Instance::cong("split", lhs, rhs)])
}

fn threej13j2(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p as i64;
    let x = ctx.x();
    let rhs = int(2 * x) + ExactRational::new(3 * p * x, 2) * q3(ctx.p)
        - ExactRational::new(3 * p, 2 * x);
    CheckEval::new(vec![Instance::cong("closed form", main2_sum(ctx.p), rhs)])
}

fn s3(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p as i64;
    let x = ctx.x();
    let rhs = ExactRational::new(-3 * p * x, 2) * q3(ctx.p) + ExactRational::new(3 * p, 2 * x);
    CheckEval::new(vec![Instance::cong("closed form", s3_term(ctx.p), rhs)])
}

fn neghalf(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let m = (p - 1) / 2;
    let m23 = 2 * (p - 1) / 3;
    let half = ExactRational::new(-1, 2);
    let lhs = binomial_rat(&half, m23);
    let rhs = int(-3 * p as i64) * sign(m) / binom(m23 as i64, m as i64);
    CheckEval::new(vec![Instance::cong("central quotient", lhs, rhs)])
}

fn twop3p(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p as i64;
    let (m, t3) = ((ctx.p - 1) / 2, (ctx.p - 1) / 3);
    let lhs = ExactRational::new(2 * p, 3 * p - 1) * poch_block(ctx.p, 1);
    let mid = binom(m as i64, t3 as i64);
    CheckEval::new(vec![
        Instance::cong("Pochhammer to binomial", lhs, mid.clone()),
        Instance::cong("binomial to 2x", mid, int(2 * ctx.x())),
    ])
}
