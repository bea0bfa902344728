//! The mod-p^3 difference chain: the two unweighted sums, their boundary
//! terms, and the ladder of central-binomial evaluations the difference
//! collapses through.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::util::{
    b_third_signed, binom, central_sum, franel_weighted_sum, int, ipow, lcm_upto, rsum, sign,
};
use super::{Applicability, CheckCtx, CheckDef, CheckEval, Instance};
use crate::comb::{binomial_rat, fermat_quotient};
use crate::padic::congruent;
use crate::rational::ExactRational;
use crate::sequences::SequenceCache;

pub(super) fn register(r: &mut Vec<CheckDef>) {
    r.push(CheckDef {
        id: "CHK-ZMAIN1",
        statement: "sum f_k/2^k equals its sigma-form exactly and reduces to \
                    p sum_{j != (p-1)/3} C(2j,j)/4^j (1 - pH_{2j} + pH_j)/(3j+1) + T1 (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: zmain1,
    });
    r.push(CheckDef {
        id: "CHK-MAIN",
        statement: "sum f_k/2^k = p sum C(m,j)(-1)^j (1 + (p/2)H_j)/(3j+1) + T1 - T2 (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: main,
    });
    r.push(CheckDef {
        id: "CHK-131",
        statement: "sum_{k<=m} (1/3)_k/(k (1)_k) = (3/2)q_3 - (3p/4)q_3^2 - (p/3) Sigma_{(p-1)/3} \
                    (mod p^2), Sigma_t = sum_{k<=t} 4^k/(k^2 C(2k,k))",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: chk131,
    });
    r.push(CheckDef {
        id: "CHK-1312",
        statement: "sum_{k<=m} (1/3)_k/(k (1/2)_k) in terms of E_{p-3} and the \
                    (2k-1)-weighted central sum (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: chk1312,
    });
    r.push(CheckDef {
        id: "CHK-P121312",
        statement: "sum_{k<=m} (1/3)_k/(k (1/2)_k) = (3/2)q_3 - (3p/4)q_3^2 + (p/3) Sigma_{(p-1)/6} \
                    (mod p^2)",
        modulus_exponent: 2,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: p121312,
    });
    r.push(CheckDef {
        id: "CHK-DIYIGE",
        statement: "the two hypergeometric tails differ by -(p/3)(Sigma_{(p-1)/3} + Sigma_{(p-1)/6}) \
                    (mod p^2), so 2p^2 times the alternating harmonic sum collapses (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: diyige,
    });
    r.push(CheckDef {
        id: "CHK-P132K1",
        statement: "the (2k-1)-weighted central sum over k <= (p-1)/3 has two alternating \
                    rewritings mod p",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: p132k1,
    });
    r.push(CheckDef {
        id: "CHK-P32",
        statement: "sum_{k<m} (-1)^k/((k+1)C(m,k)) = 2((-1)^m - 1) - 2(-1)^m E_{p-3} (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: p32,
    });
    r.push(CheckDef {
        id: "CHK-P76",
        statement: "the sixth-length alternating inverse-binomial sum: inverse-binomial link, \
                    the display with the Bernoulli term, and its simplification (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: p76,
    });
    r.push(CheckDef {
        id: "CHK-NEG56",
        statement: "sum (-1)^k/(k^2 C(-5/6,k)): shifted-binomial link and evaluation \
                    Sigma_{(p-1)/6} - (5/2)(p/3)B_{p-2}(1/3) (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: neg56,
    });
    r.push(CheckDef {
        id: "CHK-P13",
        statement: "the (2k-1)-weighted central sum to (p-1)/3 evaluates through E_{p-3} and \
                    Sigma_{(p-1)/6} (mod p); the central-binomial divisor is required",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: p13,
    });
    r.push(CheckDef {
        id: "CHK-EASY",
        statement: "sum_{j<=m} 4^j/(j C(2j,j)) = -2 + 2(-1)^m (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: easy,
    });
    r.push(CheckDef {
        id: "CHK-P133J1",
        statement: "3 sum_{j<=(p-1)/3} 4^j/((3j-1)C(2j,j)): shift link, closed form through \
                    C(-1/2,(p-1)/3), and the x-form (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: p133j1,
    });
    r.push(CheckDef {
        id: "CHK-P23",
        statement: "the high-range (3j-1) central sum walks down a five-step rewriting chain to \
                    2(-1)^m - 1/x + (1/3)C(m,(p-1)/3) Sigma_{(p-1)/6} (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: true,
        eval: p23,
    });
    r.push(CheckDef {
        id: "CHK-3J1FULL",
        statement: "the full-range (3j-1) central sums, with and without the extra 1/j, in terms \
                    of Sigma_{(p-1)/3} + Sigma_{(p-1)/6} (mod p)",
        modulus_exponent: 1,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: threej1full,
    });
    r.push(CheckDef {
        id: "CHK-BINEXP-A",
        statement: "C(p + 2(p-1)/3, p) = 1 + pH + (p^2/2)(H^2 - H^(2)) at length 2(p-1)/3 \
                    (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: binexp_a,
    });
    r.push(CheckDef {
        id: "CHK-BINEXP-B",
        statement: "C(p + (p-1)/3, p) = 1 + pH + (p^2/2)(H^2 - H^(2)) at length (p-1)/3 (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: binexp_b,
    });
    r.push(CheckDef {
        id: "CHK-BINDIFF",
        statement: "C(p+2(p-1)/3, p) - C(p+(p-1)/3, p): harmonic-difference form and its \
                    evaluation p^2 (p/3)B_{p-2}(1/3) (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: bindiff,
    });
    r.push(CheckDef {
        id: "CHK-2PH",
        statement: "2p(H_{(p-1)/3} - H_{2(p-1)/3}) = -p^2 (p/3)B_{p-2}(1/3) (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: twoph,
    });
    r.push(CheckDef {
        id: "CHK-ZHUYAO",
        statement: "the difference of the two unweighted sums: exact sigma-form of the (-4) sum \
                    and the three-link ladder to 2p^2 Z + T5 + p^2 tail (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: zhuyao,
    });
    r.push(CheckDef {
        id: "CHK-S5",
        statement: "T5 = T3 - T4 + T2 - T1 vanishes mod p^3; supporting facts \
                    C(-1/2,t) = C(m,t) and C(p-1,t) = (-1)^t (mod p)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: s5,
    });
    r.push(CheckDef {
        id: "CHK-ZHUP3",
        statement: "sum f_k/(-4)^k - sum f_k/2^k = T5 (mod p^3)",
        modulus_exponent: 3,
        applicability: Applicability::OneMod3Ge7,
        uses_representation: false,
        eval: zhup3,
    });
}

// ---------------------------------------------------------------------------
// shared building blocks

fn q3(p: u64) -> ExactRational {
    fermat_quotient(3, p).expect("p > 3")
}

fn s2sum(ctx: &CheckCtx) -> ExactRational {
    franel_weighted_sum(ctx.cache, ctx.p, 2, |_| 1)
}

fn s4sum(ctx: &CheckCtx) -> ExactRational {
    franel_weighted_sum(ctx.cache, ctx.p, -4, |_| 1)
}

/// The four boundary terms T1..T4 and their alternating combination T5.
fn t_terms(ctx: &CheckCtx) -> [ExactRational; 5] {
    let p = ctx.p;
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let m23 = 2 * (p - 1) / 3;
    let half = ExactRational::new(-1, 2);
    let bneg = binomial_rat(&half, t3);
    let bp1 = binom(p as i64 - 1, t3 as i64);
    let bmt = binom(m as i64, t3 as i64);
    let t1 = &(&bneg * &bp1) * &binom(p as i64 + t3 as i64, p as i64);
    let t2 = &bmt * &(int(1) + ExactRational::new(p as i64, 2) * ctx.h(t3));
    let t3_ = &(&bneg * &bp1) * &binom(p as i64 + m23 as i64, p as i64);
    let t4 = &bmt
        * &(int(1) + int(2 * p as i64) * ctx.h(m23)
            - ExactRational::new(3 * p as i64, 2) * ctx.h(t3));
    let t5 = &(&(&t3_ - &t4) + &t2) - &t1;
    [t1, t2, t3_, t4, t5]
}

/// Z = sum_j C(m,j)(-1)^j (H_{2j} - H_j)/(3j+1).
fn zhu_sum(ctx: &CheckCtx) -> ExactRational {
    let m = (ctx.p - 1) / 2;
    let mut cb = BigInt::one(); // C(m, j)
    let mut acc = ExactRational::zero();
    for j in 0..=m {
        let ji = j as i64;
        acc += ExactRational::from_bigint(cb.clone()) * sign(j) * (ctx.h(2 * j) - ctx.h(j))
            / int(3 * ji + 1);
        cb = cb * (m - j) / (j + 1);
    }
    acc
}

/// tail = sum_{j<=m} 4^j/((3j-1) j C(2j,j)).
fn tail(cache: &SequenceCache, p: u64) -> ExactRational {
    let m = (p - 1) / 2;
    let mut pow4 = ExactRational::one();
    let mut acc = ExactRational::zero();
    for j in 1..=m {
        let ji = j as i64;
        pow4 *= &int(4);
        acc += &pow4
            / &(int(3 * ji - 1)
                * int(ji)
                * ExactRational::from_bigint(cache.central_binomial(j)));
    }
    acc
}

/// sum_{k=1}^{top} 4^k/((2k-1) k C(2k,k)).
fn sum_2k1k(cache: &SequenceCache, top: u64) -> ExactRational {
    let mut pow4 = ExactRational::one();
    let mut acc = ExactRational::zero();
    for k in 1..=top {
        let ki = k as i64;
        pow4 *= &int(4);
        acc += &pow4
            / &(int(2 * ki - 1)
                * int(ki)
                * ExactRational::from_bigint(cache.central_binomial(k)));
    }
    acc
}

/// sum_{k=1}^{m} (1/3)_k / (k * (den)_k), with the Pochhammer ratio carried
/// incrementally so each term costs O(1) big operations.
fn hyper_sum(p: u64, den: &ExactRational) -> ExactRational {
    let m = (p - 1) / 2;
    let third = ExactRational::new(1, 3);
    let mut ratio = ExactRational::one(); // (1/3)_k / (den)_k
    let mut acc = ExactRational::zero();
    for k in 1..=m {
        let i = int(k as i64 - 1);
        ratio = ratio * ((&third + &i) / (den + &i));
        acc += &ratio / &int(k as i64);
    }
    acc
}

// ---------------------------------------------------------------------------
// evaluators

fn zmain1(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let pi = p as i64;
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let lhs = s2sum(ctx);
    // C(3j,j) and C(p+j,3j+1) carried as integer ladders; the 1/4^j weights
    // are cleared by Horner accumulation so the sum reduces once at the end.
    let sigma = {
        let mut c3 = BigInt::one(); // C(3j, j)
        let mut cp = BigInt::from(p); // C(p+j, 3j+1)
        let mut acc = BigInt::zero(); // running sum scaled by 4^(m-j)
        for j in 0..=m {
            if j > 0 {
                c3 = c3 * ((3 * j - 2) * (3 * j - 1) * (3 * j)) / (j * (2 * j - 1) * (2 * j));
                cp = cp * ((p + j) * (p - 2 * j + 1) * (p - 2 * j))
                    / ((3 * j - 1) * (3 * j) * (3 * j + 1));
            }
            acc = acc * 4 + ctx.cache.central_binomial(j) * &c3 * &cp;
        }
        ExactRational::new(acc, BigInt::one() << (2 * m as usize))
    };
    let mut reduced = t_terms(ctx)[0].clone();
    let mut pow4 = ExactRational::one();
    for j in 0..=m {
        let ji = j as i64;
        if j != t3 {
            reduced += int(pi) * ExactRational::from_bigint(ctx.cache.central_binomial(j))
                / &pow4
                * (int(1) - int(pi) * ctx.h(2 * j) + int(pi) * ctx.h(j))
                / int(3 * ji + 1);
        }
        pow4 *= &int(4);
    }
    CheckEval::new(vec![
        Instance::exact("sigma-form rewrite", lhs.clone(), sigma),
        Instance::cong("reduction with boundary term", lhs, reduced),
    ])
}

fn main(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let m = (p - 1) / 2;
    let [t1, t2, ..] = t_terms(ctx);
    let lhs = s2sum(ctx);
    let rhs = int(p as i64)
        * rsum(0, m, |j| {
            let ji = j as i64;
            binom(m as i64, ji) * sign(j)
                * (int(1) + ExactRational::new(p as i64, 2) * ctx.h(j))
                / int(3 * ji + 1)
        })
        + t1
        - t2;
    CheckEval::new(vec![Instance::cong("alternating form", lhs, rhs)])
}

fn chk131(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let t3 = (p - 1) / 3;
    let lhs = hyper_sum(p, &ExactRational::one());
    let rhs = ExactRational::new(3, 2) * q3(p)
        - ExactRational::new(3 * p as i64, 4) * q3(p) * q3(p)
        - ExactRational::new(p as i64, 3) * central_sum(ctx.cache, t3, 2);
    CheckEval::new(vec![Instance::cong("third-parameter tail", lhs, rhs)])
}

fn chk1312(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let sgn = sign(m);
    let e = ExactRational::from_bigint(ctx.cache.euler(p - 3));
    let lhs = hyper_sum(p, &ExactRational::new(1, 2));
    let rhs = ExactRational::new(4 * p as i64, 3) * &sgn * &e
        + ExactRational::new(3, 2) * q3(p)
        - ExactRational::new(3 * p as i64, 4) * q3(p) * q3(p)
        - ExactRational::new(2 * p as i64, 3) * &sgn * &sum_2k1k(ctx.cache, t3);
    CheckEval::new(vec![Instance::cong("half-parameter tail", lhs, rhs)])
}

fn p121312(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let t6 = (p - 1) / 6;
    let lhs = hyper_sum(p, &ExactRational::new(1, 2));
    let rhs = ExactRational::new(3, 2) * q3(p)
        - ExactRational::new(3 * p as i64, 4) * q3(p) * q3(p)
        + ExactRational::new(p as i64, 3) * central_sum(ctx.cache, t6, 2);
    CheckEval::new(vec![Instance::cong("sixth-length central sum", lhs, rhs)])
}

fn diyige(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3, t6) = ((p - 1) / 2, (p - 1) / 3, (p - 1) / 6);
    let both = central_sum(ctx.cache, t3, 2) + central_sum(ctx.cache, t6, 2);
    let diff = hyper_sum(p, &ExactRational::one()) - hyper_sum(p, &ExactRational::new(1, 2));
    let p2 = (p * p) as i64;
    CheckEval::new(vec![
        Instance::cong_k(
            "tail difference",
            diff,
            ExactRational::new(-(p as i64), 3) * &both,
            2,
        ),
        Instance::cong(
            "alternating-sum collapse",
            int(2 * p2) * zhu_sum(ctx),
            ExactRational::new(-p2, 3) * binom(m as i64, t3 as i64) * &both,
        ),
    ])
}

fn p132k1(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3, t6) = ((p - 1) / 2, (p - 1) / 3, (p - 1) / 6);
    let l0 = int(2)
        * rsum(1, t3, |k| {
            let ki = k as i64;
            ipow(4, k as u32) / (int(2 * ki - 1) * ExactRational::from_bigint(ctx.cache.central_binomial(k)))
        });
    let l1 = int(2)
        * rsum(1, t3, |k| {
            let ki = k as i64;
            sign(k) / (int(2 * ki - 1) * binom(m as i64, ki))
        });
    let l2 = sign((p + 1) / 2)
        * rsum(t6, m - 1, |k| {
            let ki = k as i64;
            sign(k) / (int(ki + 1) * binom(m as i64, ki))
        });
    CheckEval::new(vec![
        Instance::cong("alternating rewrite", l0, l1.clone()),
        Instance::cong("index reflection", l1, l2),
    ])
}

fn p32(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let m = (p - 1) / 2;
    let sgn = sign(m);
    let e = ExactRational::from_bigint(ctx.cache.euler(p - 3));
    let lhs = rsum(0, m - 1, |k| {
        sign(k) / (int(k as i64 + 1) * binom(m as i64, k as i64))
    });
    let rhs = int(2) * (&sgn - &int(1)) - int(2) * &sgn * &e;
    CheckEval::new(vec![Instance::cong("half-length sum", lhs, rhs)])
}

fn p76(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t6) = ((p - 1) / 2, (p - 1) / 6);
    let top = (p - 7) / 6;
    let sgn = sign(m);
    let x = ctx.x();
    let lhs = rsum(0, top, |k| {
        sign(k) / (int(k as i64 + 1) * binom(m as i64, k as i64))
    });
    let link = rsum(0, top, |k| {
        let ki = k as i64;
        ExactRational::one() / (int(ki + 1) * binom(m as i64 + ki, ki))
    });
    let b = b_third_signed(ctx);
    let neg56 = neg56_sum(p);
    let full = &sgn / &int(x) - int(2) - ExactRational::new(5, 4) * &b
        - ExactRational::new(1, 2) * &neg56;
    let simplified =
        &sgn / &int(x) - int(2) - ExactRational::new(1, 2) * central_sum(ctx.cache, t6, 2);
    CheckEval::new(vec![
        Instance::cong("inverse-binomial link", lhs.clone(), link),
        Instance::cong("display with Bernoulli term", lhs.clone(), full),
        Instance::cong("simplified display", lhs, simplified),
    ])
}

/// sum_{k<=m} (-1)^k/(k^2 C(-5/6,k)), with C(-5/6,k) carried incrementally.
fn neg56_sum(p: u64) -> ExactRational {
    let m = (p - 1) / 2;
    let base = ExactRational::new(-5, 6);
    let mut c = ExactRational::one(); // C(-5/6, k)
    let mut acc = ExactRational::zero();
    for k in 1..=m {
        c = c * ((&base - &int(k as i64 - 1)) / int(k as i64));
        acc += sign(k) / (int((k * k) as i64) * &c);
    }
    acc
}

fn neg56(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t6) = ((p - 1) / 2, (p - 1) / 6);
    let lhs = neg56_sum(p);
    let shifted = ExactRational::new(5 * p as i64 - 11, 6);
    let link = {
        let mut c = ExactRational::one(); // C((5p-11)/6, k)
        let mut acc = ExactRational::zero();
        for k in 0..=m - 1 {
            if k > 0 {
                c = c * ((&shifted - &int(k as i64 - 1)) / int(k as i64));
            }
            acc += sign(k) / (int(k as i64 + 1) * &c);
        }
        ExactRational::new(6, 5) * acc
    };
    let main_rhs =
        central_sum(ctx.cache, t6, 2) - ExactRational::new(5, 2) * b_third_signed(ctx);
    CheckEval::new(vec![
        Instance::cong("shifted-binomial link", lhs.clone(), link),
        Instance::cong("evaluation", lhs, main_rhs),
    ])
}

fn p13(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3, t6) = ((p - 1) / 2, (p - 1) / 3, (p - 1) / 6);
    let sgn = sign(m);
    let x = ctx.x();
    let e = ExactRational::from_bigint(ctx.cache.euler(p - 3));
    let sigma6 = central_sum(ctx.cache, t6, 2);

    let l0 = int(2)
        * rsum(1, t3, |k| {
            let ki = k as i64;
            ipow(4, k as u32) / (int(2 * ki - 1) * ExactRational::from_bigint(ctx.cache.central_binomial(k)))
        });
    let restored_rhs = int(-2) + ExactRational::new(1, x) + int(2) * &e
        - ExactRational::new(1, 2) * &sgn * &sigma6;

    // The display as printed omits the central-binomial divisor; record what
    // that literal reading does at this prime without letting it gate the
    // check.
    let literal = int(2)
        * rsum(1, t3, |k| {
            ipow(4, k as u32) / int(2 * k as i64 - 1)
        });
    let literal_ok = congruent(&literal, &restored_rhs, p, 1).unwrap_or(false);
    let note = format!(
        "literal reading without the central-binomial divisor {} at this prime; \
         the divisor-restored reading is the one the chain needs",
        if literal_ok { "happens to agree" } else { "disagrees" }
    );

    let heng_lhs = central_sum(ctx.cache, t3, 1);
    let heng_rhs = int(-2) + ExactRational::new(1, x);
    let rest_lhs = sum_2k1k(ctx.cache, t3);
    let rest_rhs = int(2) * &e - ExactRational::new(1, 2) * &sgn * &sigma6;

    CheckEval::with_note(
        vec![
            Instance::cong("divisor-restored display", l0, restored_rhs),
            Instance::cong("telescoped part", heng_lhs, heng_rhs),
            Instance::cong("remainder part", rest_lhs, rest_rhs),
        ],
        note,
    )
}

fn easy(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let m = (p - 1) / 2;
    let lhs = central_sum(ctx.cache, m, 1);
    let rhs = int(-2) + int(2) * sign(m);
    CheckEval::new(vec![Instance::cong("half-length telescoped sum", lhs, rhs)])
}

fn p133j1(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let x = ctx.x();
    let half = ExactRational::new(-1, 2);
    let bneg = binomial_rat(&half, t3);
    let bmt = binom(m as i64, t3 as i64);
    let sigma3 = central_sum(ctx.cache, t3, 2);

    let j0 = int(3)
        * rsum(1, t3, |j| {
            let ji = j as i64;
            ipow(4, j as u32) / (int(3 * ji - 1) * ExactRational::from_bigint(ctx.cache.central_binomial(j)))
        });
    let j1 = rsum(1, t3, |j| {
        let ji = j as i64;
        ipow(4, j as u32) / ((int(ji) + int(t3 as i64)) * ExactRational::from_bigint(ctx.cache.central_binomial(j)))
    });
    let j2 = int(-2) + int(2) / &bneg + ExactRational::new(1, 3) * &bneg * &sigma3;
    let final_rhs = int(-2) + ExactRational::new(1, x) + ExactRational::new(1, 3) * &bmt * &sigma3;

    CheckEval::new(vec![
        Instance::cong("denominator shift", j0.clone(), j1.clone()),
        Instance::cong("closed form via C(-1/2,.)", j1, j2),
        Instance::cong("x-form", j0, final_rhs),
    ])
}

fn p23(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3, t6) = ((p - 1) / 2, (p - 1) / 3, (p - 1) / 6);
    let top = (p - 7) / 6;
    let x = ctx.x();
    let bmt = binom(m as i64, t3 as i64);
    let sghalf = sign((p + 1) / 2);
    let sigma6 = central_sum(ctx.cache, t6, 2);

    let c0 = int(3)
        * rsum((p + 2) / 3, m, |j| {
            let ji = j as i64;
            ipow(4, j as u32) / (int(3 * ji - 1) * ExactRational::from_bigint(ctx.cache.central_binomial(j)))
        });
    let c1 = int(3)
        * rsum(0, top, |j| {
            let ji = j as i64;
            let mi = m as i64;
            sign(m - j) / (int(3 * (mi - ji) - 1) * binom(mi, ji))
        });
    let c2 = int(6)
        * &sghalf
        * &rsum(0, top, |j| {
            let ji = j as i64;
            ipow(4, j as u32) / (int(6 * ji + 5) * ExactRational::from_bigint(ctx.cache.central_binomial(j)))
        });
    let shift = ExactRational::new(p as i64 + 5, 6);
    let c3 = &sghalf
        * &rsum(0, top, |j| {
            let ji = j as i64;
            ipow(4, j as u32) / ((int(ji) + shift.clone()) * ExactRational::from_bigint(ctx.cache.central_binomial(j)))
        });
    let inner = rsum(1, (p + 5) / 6, |j| {
        let ji = j as i64;
        ipow(4, j as u32) / ((int(ji) + shift.clone()) * ExactRational::from_bigint(ctx.cache.central_binomial(j)))
    });
    let c4 = ExactRational::new(6, 5) * &sghalf + &sghalf * &inner + int(3) / &bmt;

    // The interior display carries a coefficient that does not match the
    // surrounding chain; record both readings in the note (the chain itself
    // is gated on the link instances, which exclude that display).
    let sg6 = sign(t6);
    let base = ExactRational::new(-16, 5) + ExactRational::new(5, 2 * x) * &sg6;
    let stated = &base - &(ExactRational::new(1, 6 * x) * &sg6 * &sigma6);
    let fixed = &base - &(ExactRational::new(2 * x, 3) * &sg6 * &sigma6);
    let stated_ok = congruent(&inner, &stated, p, 1).unwrap_or(false);
    let fixed_ok = congruent(&inner, &fixed, p, 1).unwrap_or(false);
    let note = format!(
        "interior display: printed 1/(6x) coefficient {}, consistent 2x/3 coefficient {}",
        if stated_ok { "agrees" } else { "disagrees" },
        if fixed_ok { "agrees" } else { "disagrees" }
    );

    let final_rhs = int(2) * sign(m) - ExactRational::new(1, x)
        + ExactRational::new(1, 3) * &bmt * &sigma6;

    CheckEval::with_note(
        vec![
            Instance::cong("index reflection", c0.clone(), c1.clone()),
            Instance::cong("sixth-length rewrite", c1, c2.clone()),
            Instance::cong("denominator shift", c2, c3.clone()),
            Instance::cong("boundary extraction", c3, c4),
            Instance::cong("x-form", c0, final_rhs),
        ],
        note,
    )
}

fn threej1full(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3, t6) = ((p - 1) / 2, (p - 1) / 3, (p - 1) / 6);
    let bmt = binom(m as i64, t3 as i64);
    let both = central_sum(ctx.cache, t3, 2) + central_sum(ctx.cache, t6, 2);

    let full = int(3)
        * rsum(1, m, |j| {
            let ji = j as i64;
            ipow(4, j as u32) / (int(3 * ji - 1) * ExactRational::from_bigint(ctx.cache.central_binomial(j)))
        });
    let full_rhs =
        int(-2) + int(2) * sign(m) + ExactRational::new(1, 3) * &bmt * &both;
    let with_j = tail(ctx.cache, p);
    let with_j_rhs = ExactRational::new(1, 3) * &bmt * &both;

    CheckEval::new(vec![
        Instance::cong("without 1/j", full, full_rhs),
        Instance::cong("with 1/j", with_j, with_j_rhs),
    ])
}

fn binexp_expand(ctx: &CheckCtx, len: u64) -> (ExactRational, ExactRational) {
    let p = ctx.p;
    let lhs = binom(p as i64 + len as i64, p as i64);
    let h = ctx.h(len);
    let rhs = int(1)
        + int(p as i64) * &h
        + ExactRational::new((p * p) as i64, 2) * (&h * &h - ctx.h2(len));
    (lhs, rhs)
}

fn binexp_a(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let m23 = 2 * (p - 1) / 3;
    let (lhs, rhs) = binexp_expand(ctx, m23);
    // the printed lower index does not reproduce the expansion; record it
    let t3 = (p - 1) / 3;
    let lit = binom(p as i64 + m23 as i64, t3 as i64);
    let lit_ok = congruent(&lit, &rhs, p, 3).unwrap_or(false);
    let note = format!(
        "lower index as printed {} the expansion; the symmetric lower index p is the \
         consistent reading",
        if lit_ok { "reproduces" } else { "does not reproduce" }
    );
    CheckEval::with_note(vec![Instance::cong("two-thirds length", lhs, rhs)], note)
}

fn binexp_b(ctx: &CheckCtx) -> CheckEval {
    let t3 = (ctx.p - 1) / 3;
    let (lhs, rhs) = binexp_expand(ctx, t3);
    CheckEval::new(vec![Instance::cong("third length", lhs, rhs)])
}

fn bindiff(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (t3, m23) = ((p - 1) / 3, 2 * (p - 1) / 3);
    let lhs = binom(p as i64 + m23 as i64, p as i64) - binom(p as i64 + t3 as i64, p as i64);
    let link = int(p as i64) * (ctx.h(m23) - ctx.h(t3))
        + ExactRational::new((p * p) as i64, 2) * (ctx.h2(t3) - ctx.h2(m23));
    let main_rhs = int((p * p) as i64) * b_third_signed(ctx);
    CheckEval::new(vec![
        Instance::cong("harmonic-difference form", lhs.clone(), link),
        Instance::cong("Bernoulli evaluation", lhs, main_rhs),
    ])
}

fn twoph(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (t3, m23) = ((p - 1) / 3, 2 * (p - 1) / 3);
    let lhs = int(2 * p as i64) * (ctx.h(t3) - ctx.h(m23));
    let rhs = -int((p * p) as i64) * b_third_signed(ctx);
    CheckEval::new(vec![Instance::cong("harmonic difference", lhs, rhs)])
}

fn zhuyao(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let s4 = s4sum(ctx);
    let s2 = s2sum(ctx);
    let [_, _, t3_term, t4, t5] = t_terms(ctx);
    let pi = p as i64;

    let sigma = {
        let mut cb3 = BigInt::one(); // C(3j, j)
        let mut cp2 = BigInt::from(p); // C(p + 2j, 3j + 1)
        let mut acc = BigInt::zero(); // running sum scaled by (-4)^(p-1-j)
        for j in 0..=p - 1 {
            if j > 0 {
                cb3 = cb3 * ((3 * j - 2) * (3 * j - 1) * (3 * j)) / (j * (2 * j - 1) * (2 * j));
                cp2 = cp2 * ((p + 2 * j - 1) * (p + 2 * j) * (p - j))
                    / ((3 * j - 1) * (3 * j) * (3 * j + 1));
            }
            acc = acc * -4 + ctx.cache.central_binomial(j) * &cb3 * &cp2;
        }
        let mut den = BigInt::one() << (2 * (p - 1) as usize);
        if (p - 1) % 2 == 1 {
            den = -den;
        }
        ExactRational::new(acc, den)
    };

    let diff = &s4 - &t3_term;

    // The three link sums share their harmonic brackets, so they are
    // accumulated together as integers over L = lcm(1..=3p) (harmonic numbers
    // carried as L*H_j), with one rational reduction per link at the end.
    let l = lcm_upto(3 * p);
    let l2 = &l * &l;
    let mut hj = BigInt::zero(); // L * H_j
    let mut h2j = BigInt::zero(); // L * H_{2j}
    let mut cmj = BigInt::one(); // C(m, j)
    let mut acc_a = BigInt::zero(); // head of link_a, over L^2 * 4^m
    let mut acc_b = BigInt::zero(); // head of link_b, over 2 L^2
    let mut acc_c = BigInt::zero(); // link_c sum, over 2 L^2
    for j in 0..=m {
        if j > 0 {
            hj += &l / j;
            h2j += &l / (2 * j - 1) + &l / (2 * j);
            cmj = cmj * (m - j + 1) / j;
        }
        let lfrac = &l / (3 * j + 1);
        // 2L * (1 + 2p H_{2j} - (3p/2) H_j)
        let brj = &l * 2u32 + &h2j * (4 * p) - &hj * (3 * p);
        let tb = &cmj * &brj * &lfrac;
        let tc = if j % 2 == 0 { tb } else { -tb };
        acc_c += &tc;
        if j != t3 {
            acc_b += &tc;
            // L * (1 + p H_{2j} - p H_j), weighted by C(2j,j)/4^j
            let bra = &l + (&h2j - &hj) * p;
            acc_a += ctx.cache.central_binomial(j)
                * bra
                * &lfrac
                * (BigInt::one() << (2 * (m - j) as usize));
        }
    }
    let mut acc_a2 = BigInt::zero(); // tail of link_a, over L * 4^(p-1)
    for j in m + 1..=p - 1 {
        acc_a2 += ctx.cache.central_binomial(j)
            * (&l / (3 * j + 1))
            * (BigInt::one() << (2 * (p - 1 - j) as usize));
    }
    let link_a = int(pi) * ExactRational::new(acc_a, &l2 * (BigInt::one() << (2 * m as usize)))
        + int(2 * pi)
            * ExactRational::new(acc_a2, &l * (BigInt::one() << (2 * (p - 1) as usize)));

    let link_b = int(pi) * ExactRational::new(acc_b, &l2 * 2u32)
        + rsum(m + 1, p - 1, |j| {
            let ji = j as i64;
            int(4 * pi * pi)
                / (ipow(4, j as u32) * int(3 * ji + 1) * int(ji)
                    * ExactRational::from_bigint(ctx.cache.central_binomial(p - j)))
        });

    let link_c = int(pi) * ExactRational::new(acc_c, &l2 * 2u32)
        + int(pi * pi) * tail(ctx.cache, p)
        - t4;

    let main_lhs = &s4 - &s2;
    let main_rhs = int(2 * pi * pi) * zhu_sum(ctx) + &t5 + int(pi * pi) * tail(ctx.cache, p);

    CheckEval::new(vec![
        Instance::exact("sigma-form rewrite", s4.clone(), sigma),
        Instance::cong("ladder step 1", diff.clone(), link_a),
        Instance::cong("ladder step 2", diff.clone(), link_b),
        Instance::cong("ladder step 3", diff, link_c),
        Instance::cong("difference form", main_lhs, main_rhs),
    ])
}

fn s5(ctx: &CheckCtx) -> CheckEval {
    let p = ctx.p;
    let (m, t3) = ((p - 1) / 2, (p - 1) / 3);
    let [_, _, _, _, t5] = t_terms(ctx);
    let half = ExactRational::new(-1, 2);
    CheckEval::new(vec![
        Instance::cong("alternating combination vanishes", t5, int(0)),
        Instance::cong_k(
            "shifted vs central binomial",
            binomial_rat(&half, t3),
            binom(m as i64, t3 as i64),
            1,
        ),
        Instance::cong_k("top p-1 binomial", binom(p as i64 - 1, t3 as i64), sign(t3), 1),
    ])
}

fn zhup3(ctx: &CheckCtx) -> CheckEval {
    let [_, _, _, _, t5] = t_terms(ctx);
    let lhs = s4sum(ctx) - s2sum(ctx);
    CheckEval::new(vec![Instance::cong("boundary-only difference", lhs, t5)])
}
