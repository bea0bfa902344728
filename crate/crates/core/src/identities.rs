//! Exact combinatorial identities: a registry of finite identities verified
//! by direct evaluation over both sides (no modular reduction).
//!
//! These are the algebraic ingredients the congruence checks rearrange sums
//! with; each is certified here as an identity of rationals so that a check
//! failure can never be blamed on an algebra step.

use crate::comb::{binomial, binomial_rat, factorial, harmonic, rising_factorial};
use crate::error::Error;
use crate::rational::ExactRational;
use crate::rng::SplitMix64;
use crate::sequences::{companion_g, franel};

/// One evaluated parameter point of one identity.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCase {
    pub identity_id: &'static str,
    /// Human-readable parameter assignment, e.g. `"n=5, j=1"`.
    pub params: String,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub pass: bool,
}

impl IdentityCase {
    fn new(id: &'static str, params: String, lhs: ExactRational, rhs: ExactRational) -> Self {
        let pass = lhs == rhs;
        IdentityCase { identity_id: id, params, lhs, rhs, pass }
    }
}

/// A registered identity with its verified parameter grid.
pub struct IdentityDef {
    pub id: &'static str,
    /// Self-contained statement of the identity.
    pub statement: &'static str,
    /// Largest outer parameter the grid is verified over (chosen so the full
    /// sweep stays fast).
    pub max_n: u64,
    eval: fn(u64, &mut SplitMix64) -> Vec<IdentityCase>,
}

/// Summary of one identity over its grid.
#[derive(Clone, Debug)]
pub struct IdentitySummary {
    pub id: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<IdentityCase>,
}

/// Result of sweeping the whole registry.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub max_n: u64,
    pub per_identity: Vec<IdentitySummary>,
    pub all_pass: bool,
}

// ---------------------------------------------------------------------------
// small local helpers

fn int(n: i64) -> ExactRational {
    ExactRational::from_int(n)
}

fn bi(n: i64, m: i64) -> ExactRational {
    ExactRational::from_bigint(binomial(n, m))
}

fn sign(n: u64) -> ExactRational {
    if n % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn rsum(lo: u64, hi_excl: u64, mut f: impl FnMut(u64) -> ExactRational) -> ExactRational {
    let mut acc = ExactRational::zero();
    for k in lo..hi_excl {
        acc += f(k);
    }
    acc
}

/// `sum_{k=1}^{top} 4^k / (k^power * C(2k,k))`.
fn central(top: u64, power: u32) -> ExactRational {
    rsum(1, top + 1, |k| {
        ExactRational::from_int(4).pow(k as i32)
            / ExactRational::from_bigint(num_bigint::BigInt::from(k).pow(power) * binomial(2 * k as i64, k as i64))
    })
}

/// Draw `count` rationals distinct from each other and from `taken`,
/// rejecting anything `reject` vetoes. Numerators in [-12, 12], denominators
/// in [1, 9].
fn draw_rationals(
    rng: &mut SplitMix64,
    count: usize,
    taken: &[ExactRational],
    mut reject: impl FnMut(&ExactRational) -> bool,
) -> Vec<ExactRational> {
    let mut out: Vec<ExactRational> = Vec::with_capacity(count);
    while out.len() < count {
        let num = rng.below(25) as i64 - 12;
        let den = rng.below(9) as i64 + 1;
        let q = ExactRational::new(num, den);
        if reject(&q) || taken.contains(&q) || out.contains(&q) {
            continue;
        }
        out.push(q);
    }
    out
}

// ---------------------------------------------------------------------------
// evaluators (one per registry entry; n is the outer grid parameter)

/// Cubed-binomial generating identity in a free variable z: checked at fixed
/// points plus n+2 seeded rationals (enough to certify a degree-n polynomial
/// identity).
fn id_21_at(n: u64, z: &ExactRational) -> (ExactRational, ExactRational) {
    let lhs = rsum(0, n + 1, |k| {
        let c = bi(n as i64, k as i64);
        &(&c * &c) * &c * z.pow(k as i32)
    });
    let rhs = rsum(0, n / 2 + 1, |k| {
        let (ni, ki) = (n as i64, k as i64);
        bi(ni + ki, 3 * ki)
            * bi(2 * ki, ki)
            * bi(3 * ki, ki)
            * z.pow(k as i32)
            * (ExactRational::one() + z.clone()).pow((n - 2 * k) as i32)
    });
    (lhs, rhs)
}

fn eval_21(n: u64, rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let fixed = [int(1), int(-4), int(2), ExactRational::new(-1, 2), int(3)];
    let extra = draw_rationals(rng, n as usize + 2, &fixed, |_| false);
    fixed
        .iter()
        .chain(extra.iter())
        .map(|z| {
            let (lhs, rhs) = id_21_at(n, z);
            IdentityCase::new("ID-21", format!("n={n}, z={z}"), lhs, rhs)
        })
        .collect()
}

/// Cubed-binomial sum as a single (-4)-weighted sum.
fn eval_22(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let lhs = ExactRational::from_bigint(franel(n));
    let rhs = rsum(0, n + 1, |k| {
        let (ni, ki) = (n as i64, k as i64);
        bi(ni + 2 * ki, 3 * ki)
            * bi(2 * ki, ki)
            * bi(3 * ki, ki)
            * ExactRational::from_int(-4).pow((n - k) as i32)
    });
    vec![IdentityCase::new("ID-22", format!("n={n}"), lhs, rhs)]
}

/// Binomial transform of the cubed-binomial sequence equals its companion.
fn eval_barrucand(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let lhs = rsum(0, n + 1, |k| bi(n as i64, k as i64) * ExactRational::from_bigint(franel(k)));
    let rhs = ExactRational::from_bigint(companion_g(n));
    vec![IdentityCase::new("ID-BARRUCAND", format!("n={n}"), lhs, rhs)]
}

/// Partial-fraction form of n!/(x(x+1)...(x+n)); poles at integer
/// x in [-n, 0].
fn id_kx_at(n: u64, x: &ExactRational) -> (ExactRational, ExactRational) {
    let lhs = rsum(0, n + 1, |k| {
        bi(n as i64, k as i64) * sign(k) / (x + &int(k as i64))
    });
    let rhs = ExactRational::from_bigint(factorial(n)) / rising_factorial(x, n + 1);
    (lhs, rhs)
}

fn kx_is_pole(n: u64, x: &ExactRational) -> bool {
    if !x.is_integer() {
        return false;
    }
    let v = x.numer().clone();
    v <= num_bigint::BigInt::from(0) && v >= num_bigint::BigInt::from(-(n as i64))
}

fn eval_kx(n: u64, rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let fixed = [
        ExactRational::new(1, 3),
        ExactRational::new(2, 3),
        ExactRational::new(5, 2),
        int(7),
        ExactRational::new(-1, 5),
    ];
    let extra = draw_rationals(rng, n as usize + 2, &fixed, |q| kx_is_pole(n, q));
    fixed
        .iter()
        .chain(extra.iter())
        .map(|x| {
            let (lhs, rhs) = id_kx_at(n, x);
            IdentityCase::new("ID-KX", format!("n={n}, x={x}"), lhs, rhs)
        })
        .collect()
}

/// Weighted hockey-stick: sum_{k=2j}^{n-1} (3k+4) C(k+j, 3j) in closed form.
fn eval_sigma_a(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    (0..=n / 2)
        .map(|j| {
            let (ni, ji) = (n as i64, j as i64);
            let lhs = rsum(2 * j, n, |k| int(3 * k as i64 + 4) * bi(k as i64 + ji, 3 * ji));
            let rhs = ExactRational::new(9 * ni * ji + 3 * ni + 9 * ji + 5, 3 * ji + 2)
                * bi(ni + ji, 3 * ji + 1);
            IdentityCase::new("ID-SIGMA-A", format!("n={n}, j={j}"), lhs, rhs)
        })
        .collect()
}

/// Companion weighted hockey-stick with doubled shift.
fn eval_sigma_b(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    (0..=n)
        .map(|j| {
            let (ni, ji) = (n as i64, j as i64);
            let lhs = rsum(j, n, |k| int(3 * k as i64 + 2) * bi(k as i64 + 2 * ji, 3 * ji));
            let rhs = ExactRational::new(9 * ni * ji + 3 * ni + 1, 3 * ji + 2)
                * bi(ni + 2 * ji, 3 * ji + 1);
            IdentityCase::new("ID-SIGMA-B", format!("n={n}, j={j}"), lhs, rhs)
        })
        .collect()
}

/// Plain hockey-stick variant.
fn eval_sigma_c(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    (0..(n + 1) / 2)
        .map(|j| {
            let (ni, ji) = (n as i64, j as i64);
            let lhs = rsum(2 * j, n, |k| bi(k as i64 + ji, 3 * ji));
            let rhs = bi(ni + ji, 3 * ji + 1);
            IdentityCase::new("ID-SIGMA-C", format!("n={n}, j={j}"), lhs, rhs)
        })
        .collect()
}

/// Inverse-binomial partial fraction: 1/C(n+1+k, n+1) as an alternating sum;
/// valid for rational k away from poles {-1, ..., -(n+1)}.
fn id_cyid_at(n: u64, k: &ExactRational) -> (ExactRational, ExactRational) {
    let top = k + &int(n as i64 + 1);
    let lhs = ExactRational::one() / binomial_rat(&top, n + 1);
    let rhs = int(n as i64 + 1)
        * rsum(0, n + 1, |r| {
            bi(n as i64, r as i64) * sign(r) / (k + &int(r as i64 + 1))
        });
    (lhs, rhs)
}

fn cyid_is_pole(n: u64, k: &ExactRational) -> bool {
    if !k.is_integer() {
        return false;
    }
    let v = k.numer().clone();
    v <= num_bigint::BigInt::from(-1) && v >= num_bigint::BigInt::from(-(n as i64) - 1)
}

fn eval_cyid(n: u64, rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let mut ks: Vec<ExactRational> = (0..=25).map(|k| int(k)).collect();
    ks.extend(draw_rationals(rng, 3, &ks, |q| cyid_is_pole(n, q)));
    ks.iter()
        .map(|k| {
            let (lhs, rhs) = id_cyid_at(n, k);
            IdentityCase::new("ID-CYID", format!("n={n}, k={k}"), lhs, rhs)
        })
        .collect()
}

/// Three displayed forms of the alternating (H_{2j} - H_j)/(3j+1) sum agree.
fn eval_zhuid(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let e1 = rsum(0, n + 1, |j| {
        int(2) * bi(n as i64, j as i64) * sign(j) * (harmonic(2 * j, 1) - harmonic(j, 1))
            / int(3 * j as i64 + 1)
    });

    let mut prod_full = ExactRational::one();
    for k in 1..=n as i64 {
        prod_full *= &ExactRational::new(3 * k, 3 * k - 2);
    }
    let mut t1 = ExactRational::zero();
    let mut pr = ExactRational::one();
    for k in 1..=n as i64 {
        pr *= &ExactRational::new(3 * k - 2, 3 * k);
        t1 += &pr / &int(k);
    }
    let mut t2 = ExactRational::zero();
    let mut pr = ExactRational::one();
    for k in 1..=n as i64 {
        pr *= &ExactRational::new(2 * (3 * k - 2), 3 * (2 * k - 1));
        t2 += &pr / &int(k);
    }
    let e2 = prod_full * (t1 - t2) / int(3 * n as i64 + 1);

    let one = ExactRational::one();
    let third = ExactRational::new(1, 3);
    let half = ExactRational::new(1, 2);
    let head = rising_factorial(&one, n) / (int(3 * n as i64 + 1) * rising_factorial(&third, n));
    let s_a = rsum(1, n + 1, |k| {
        rising_factorial(&third, k) / (int(k as i64) * rising_factorial(&one, k))
    });
    let s_b = rsum(1, n + 1, |k| {
        rising_factorial(&third, k) / (int(k as i64) * rising_factorial(&half, k))
    });
    let e3 = head * (s_a - s_b);

    vec![
        IdentityCase::new("ID-ZHUID", format!("n={n}, forms 1=2"), e1, e2.clone()),
        IdentityCase::new("ID-ZHUID", format!("n={n}, forms 2=3"), e2, e3),
    ]
}

/// Alternating inverse-binomial sum in closed form.
fn eval_invbinom(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let ni = n as i64;
    let lhs = rsum(0, n + 1, |k| {
        sign(k) / (int(k as i64 + 1) * bi(ni, k as i64))
    });
    let alt = rsum(1, n + 1, |k| sign(k) / int((k * k) as i64));
    let rhs = ExactRational::new(if n % 2 == 0 { 1 } else { -3 }, ni + 1)
        - int(ni + 1) * harmonic(n, 2)
        - int(2) * int(ni + 1) * alt;
    vec![IdentityCase::new("ID-INVBINOM", format!("n={n}"), lhs, rhs)]
}

/// Telescoping central-binomial sum.
fn eval_heng(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let lhs = central(n, 1);
    let rhs = int(-2)
        + int(2) * ExactRational::from_int(4).pow(n as i32)
            / ExactRational::from_bigint(binomial(2 * n as i64, n as i64));
    vec![IdentityCase::new("ID-HENG", format!("n={n}"), lhs, rhs)]
}

/// Shifted-denominator central-binomial sum in closed form.
fn eval_important(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let ni = n as i64;
    let lhs = rsum(1, n + 1, |k| {
        ExactRational::from_int(4).pow(k as i32)
            / (int(k as i64 + ni) * bi(2 * k as i64, k as i64))
    });
    let cb = ExactRational::from_bigint(binomial(2 * ni, ni));
    let pw = ExactRational::from_int(4).pow(n as i32);
    let rhs = int(-2) + int(2) * &pw / &cb - int(ni) * &cb / &pw * central(n, 2);
    vec![IdentityCase::new("ID-IMPORTANT", format!("n={n}"), lhs, rhs)]
}

/// Binomial-transform inversion of the 1/(k(6k-1)) partial sums; the inner
/// rewriting through C(-5/6, k) is certified alongside.
fn eval_r6k(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let five_sixth = ExactRational::new(5, 6);
    let one = ExactRational::one();
    let lhs = rsum(1, n + 1, |r| {
        sign(r) / int(r as i64)
            * bi(n as i64, r as i64)
            * rsum(1, r + 1, |k| ExactRational::new(1, (k * (6 * k - 1)) as i64))
    });
    let rhs = harmonic(n, 2)
        - rsum(1, n + 1, |k| {
            rising_factorial(&one, k)
                / (int((k * k) as i64) * rising_factorial(&five_sixth, k))
        });
    let mut out = vec![IdentityCase::new("ID-R6K", format!("n={n}"), lhs, rhs)];
    if n >= 1 {
        let neg = ExactRational::new(-5, 6);
        let a = sign(n) / (int((n * n) as i64) * binomial_rat(&neg, n));
        let b = rising_factorial(&one, n) / (int((n * n) as i64) * rising_factorial(&five_sixth, n));
        out.push(IdentityCase::new("ID-R6K", format!("n={n}, shifted-binomial rewriting"), a, b));
    }
    out
}

/// Same inversion with 1/(k(2k-1)) partial sums and central binomials.
fn eval_r2k(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let lhs = rsum(1, n + 1, |r| {
        sign(r) / int(r as i64)
            * bi(n as i64, r as i64)
            * rsum(1, r + 1, |k| ExactRational::new(1, (k * (2 * k - 1)) as i64))
    });
    let rhs = harmonic(n, 2) - central(n, 2);
    vec![IdentityCase::new("ID-R2K", format!("n={n}"), lhs, rhs)]
}

/// Partial-fraction rearrangement of a shifted harmonic difference; exact in
/// both the length m and the shift r.
fn eval_hshift(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let m = n;
    (0..=m)
        .map(|r| {
            let lhs = harmonic(m, 1) - rsum(1, m + 1, |k| ExactRational::new(1, (k + r) as i64));
            let rhs = rsum(1, r + 1, |k| {
                ExactRational::new(m as i64, (k * (m + k)) as i64)
            });
            IdentityCase::new("ID-HSHIFT-6", format!("m={m}, r={r}"), lhs, rhs)
        })
        .collect()
}

/// 1/((2k-1)k) = 2/(2k-1) - 1/k summed against the central-binomial weight.
fn eval_2k1k(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let w = |k: u64| {
        ExactRational::from_int(4).pow(k as i32)
            / ExactRational::from_bigint(binomial(2 * k as i64, k as i64))
    };
    let lhs = rsum(1, n + 1, |k| w(k) / int((2 * k as i64 - 1) * k as i64));
    let rhs = int(2) * rsum(1, n + 1, |k| w(k) / int(2 * k as i64 - 1)) - central(n, 1);
    vec![IdentityCase::new("ID-2K1K-SPLIT", format!("n={n}"), lhs, rhs)]
}

/// 1/((3j-1)j) = 3/(3j-1) - 1/j summed against the central-binomial weight.
fn eval_3j1(n: u64, _rng: &mut SplitMix64) -> Vec<IdentityCase> {
    let w = |j: u64| {
        ExactRational::from_int(4).pow(j as i32)
            / ExactRational::from_bigint(binomial(2 * j as i64, j as i64))
    };
    let lhs = rsum(1, n + 1, |j| w(j) / int((3 * j as i64 - 1) * j as i64));
    let rhs = int(3) * rsum(1, n + 1, |j| w(j) / int(3 * j as i64 - 1)) - central(n, 1);
    vec![IdentityCase::new("ID-3J1-SPLIT", format!("n={n}"), lhs, rhs)]
}

// ---------------------------------------------------------------------------
// registry and public operations

/// The identity registry in stable order.
pub fn identity_registry() -> &'static [IdentityDef] {
    static REGISTRY: std::sync::OnceLock<Vec<IdentityDef>> = std::sync::OnceLock::new();
    REGISTRY.get_or_init(|| {
        vec![
            IdentityDef {
                id: "ID-21",
                statement: "sum_k C(n,k)^3 z^k = sum_k C(n+k,3k) C(2k,k) C(3k,k) z^k (1+z)^(n-2k)",
                max_n: 40,
                eval: eval_21,
            },
            IdentityDef {
                id: "ID-22",
                statement: "sum_k C(n,k)^3 = sum_k C(n+2k,3k) C(2k,k) C(3k,k) (-4)^(n-k)",
                max_n: 60,
                eval: eval_22,
            },
            IdentityDef {
                id: "ID-BARRUCAND",
                statement: "sum_k C(n,k) f_k = g_n for the cubed-binomial sequence f and its companion g",
                max_n: 100,
                eval: eval_barrucand,
            },
            IdentityDef {
                id: "ID-KX",
                statement: "sum_k C(n,k) (-1)^k/(x+k) = n!/(x(x+1)...(x+n)) away from poles",
                max_n: 30,
                eval: eval_kx,
            },
            IdentityDef {
                id: "ID-SIGMA-A",
                statement: "sum_{k=2j}^{n-1} (3k+4) C(k+j,3j) = (9nj+3n+9j+5)/(3j+2) C(n+j,3j+1)",
                max_n: 40,
                eval: eval_sigma_a,
            },
            IdentityDef {
                id: "ID-SIGMA-B",
                statement: "sum_{k=j}^{n-1} (3k+2) C(k+2j,3j) = (9nj+3n+1)/(3j+2) C(n+2j,3j+1)",
                max_n: 40,
                eval: eval_sigma_b,
            },
            IdentityDef {
                id: "ID-SIGMA-C",
                statement: "sum_{k=2j}^{n-1} C(k+j,3j) = C(n+j,3j+1)",
                max_n: 60,
                eval: eval_sigma_c,
            },
            IdentityDef {
                id: "ID-CYID",
                statement: "1/C(n+1+k,n+1) = (n+1) sum_r C(n,r)(-1)^r/(k+r+1), rational k away from poles",
                max_n: 25,
                eval: eval_cyid,
            },
            IdentityDef {
                id: "ID-ZHUID",
                statement: "three closed forms of sum_j 2 C(n,j)(-1)^j (H_{2j}-H_j)/(3j+1) agree",
                max_n: 30,
                eval: eval_zhuid,
            },
            IdentityDef {
                id: "ID-INVBINOM",
                statement: "sum_k (-1)^k/((k+1)C(n,k)) = (2(-1)^n-1)/(n+1) - (n+1)H^(2)_n - 2(n+1) sum (-1)^k/k^2",
                max_n: 40,
                eval: eval_invbinom,
            },
            IdentityDef {
                id: "ID-HENG",
                statement: "sum_{k<=n} 4^k/(k C(2k,k)) = -2 + 2*4^n/C(2n,n)",
                max_n: 60,
                eval: eval_heng,
            },
            IdentityDef {
                id: "ID-IMPORTANT",
                statement: "sum_{k<=n} 4^k/((k+n)C(2k,k)) = -2 + 2*4^n/C(2n,n) - n C(2n,n)/4^n sum 4^k/(k^2 C(2k,k))",
                max_n: 40,
                eval: eval_important,
            },
            IdentityDef {
                id: "ID-R6K",
                statement: "sum_r (-1)^r/r C(n,r) sum_{k<=r} 1/(k(6k-1)) = H^(2)_n - sum_k (1)_k/(k^2 (5/6)_k)",
                max_n: 30,
                eval: eval_r6k,
            },
            IdentityDef {
                id: "ID-R2K",
                statement: "sum_r (-1)^r/r C(n,r) sum_{k<=r} 1/(k(2k-1)) = H^(2)_n - sum_k 4^k/(k^2 C(2k,k))",
                max_n: 30,
                eval: eval_r2k,
            },
            IdentityDef {
                id: "ID-HSHIFT-6",
                statement: "H_m - sum_{k<=m} 1/(k+r) = sum_{k<=r} m/(k(m+k)) for all m, r >= 0",
                max_n: 30,
                eval: eval_hshift,
            },
            IdentityDef {
                id: "ID-2K1K-SPLIT",
                statement: "sum 4^k/((2k-1)k C(2k,k)) = 2 sum 4^k/((2k-1)C(2k,k)) - sum 4^k/(k C(2k,k))",
                max_n: 40,
                eval: eval_2k1k,
            },
            IdentityDef {
                id: "ID-3J1-SPLIT",
                statement: "sum 4^j/((3j-1)j C(2j,j)) = 3 sum 4^j/((3j-1)C(2j,j)) - sum 4^j/(j C(2j,j))",
                max_n: 40,
                eval: eval_3j1,
            },
        ]
    })
}

pub fn find_identity(id: &str) -> Result<&'static IdentityDef, Error> {
    identity_registry()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Evaluate one identity at outer parameter `n` over its full inner grid.
/// Inner parameters that make both sums empty still compare (0 = 0).
pub fn verify_identity(id: &str, n: u64, seed: u64) -> Result<Vec<IdentityCase>, Error> {
    let def = find_identity(id)?;
    if n > def.max_n {
        return Err(Error::ParamOutOfRange(format!(
            "{id}: n={n} exceeds verified grid bound {}",
            def.max_n
        )));
    }
    let mut rng = SplitMix64::keyed(seed, def.id, n);
    Ok((def.eval)(n, &mut rng))
}

/// Evaluate a rational-function identity at one explicit sample point.
/// Errors with PoleSample when the point is a pole of either side.
pub fn rational_function_case(
    id: &str,
    n: u64,
    point: &ExactRational,
) -> Result<IdentityCase, Error> {
    find_identity(id)?;
    let (lhs, rhs) = match id {
        "ID-KX" => {
            if kx_is_pole(n, point) {
                return Err(Error::PoleSample);
            }
            id_kx_at(n, point)
        }
        "ID-CYID" => {
            if cyid_is_pole(n, point) {
                return Err(Error::PoleSample);
            }
            id_cyid_at(n, point)
        }
        "ID-21" => id_21_at(n, point),
        other => {
            return Err(Error::ParamOutOfRange(format!(
                "{other} has no free rational variable to sample"
            )))
        }
    };
    let def = find_identity(id)?;
    Ok(IdentityCase::new(def.id, format!("n={n}, point={point}"), lhs, rhs))
}

/// Certify a rational-function identity by agreement at `sample_count`
/// distinct seeded points (poles rejected internally, so sampling never
/// fails). With sample_count > the degree bound this is a proof of equality.
pub fn verify_rational_function_identity(
    id: &str,
    n: u64,
    sample_count: usize,
    seed: u64,
) -> Result<bool, Error> {
    find_identity(id)?;
    let mut rng = SplitMix64::keyed(seed, id, n);
    let reject: fn(u64, &ExactRational) -> bool = match id {
        "ID-KX" => kx_is_pole,
        "ID-CYID" => cyid_is_pole,
        "ID-21" => |_, _| false,
        other => {
            return Err(Error::ParamOutOfRange(format!(
                "{other} has no free rational variable to sample"
            )))
        }
    };
    let points = draw_rationals(&mut rng, sample_count, &[], |q| reject(n, q));
    for pt in &points {
        let case = rational_function_case(id, n, pt)?;
        if !case.pass {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Run every registered identity over its grid up to `min(max_n, entry bound)`.
pub fn sweep_identities(max_n: u64, seed: u64) -> IdentityReport {
    let mut per_identity: Vec<IdentitySummary> = identity_registry()
        .iter()
        .map(|def| {
            let mut cases = 0u64;
            let mut failures = 0u64;
            let mut first_failure = None;
            for n in 0..=max_n.min(def.max_n) {
                let mut rng = SplitMix64::keyed(seed, def.id, n);
                for case in (def.eval)(n, &mut rng) {
                    cases += 1;
                    if !case.pass {
                        failures += 1;
                        if first_failure.is_none() {
                            first_failure = Some(case);
                        }
                    }
                }
            }
            IdentitySummary { id: def.id, cases, failures, first_failure }
        })
        .collect();
    per_identity.sort_by_key(|s| s.id);
    let all_pass = per_identity.iter().all(|s| s.failures == 0);
    IdentityReport { max_n, per_identity, all_pass }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::DEFAULT_SEED;

    #[test]
    fn sigma_a_frozen_case() {
        let cases = verify_identity("ID-SIGMA-A", 5, DEFAULT_SEED).unwrap();
        let c = cases.iter().find(|c| c.params == "n=5, j=1").unwrap();
        assert_eq!(c.lhs, int(222));
        assert_eq!(c.rhs, int(222));
        assert!(c.pass);
    }

    #[test]
    fn heng_and_21_frozen_cases() {
        let heng = verify_identity("ID-HENG", 1, DEFAULT_SEED).unwrap();
        assert_eq!(heng[0].lhs, int(2));
        assert!(heng[0].pass);

        let (lhs, rhs) = id_21_at(2, &int(1));
        assert_eq!(lhs, int(10));
        assert_eq!(rhs, int(10));
    }

    #[test]
    fn invbinom_single_case() {
        let cases = verify_identity("ID-INVBINOM", 1, DEFAULT_SEED).unwrap();
        assert_eq!(cases[0].lhs, ExactRational::new(1, 2));
        assert!(cases[0].pass);
    }

    #[test]
    fn cyid_explicit_point() {
        // 1/C(6,3) = 3(1/4 - 2/5 + 1/6) = 1/20
        let case = rational_function_case("ID-CYID", 2, &int(3)).unwrap();
        assert_eq!(case.lhs, ExactRational::new(1, 20));
        assert!(case.pass);
    }

    #[test]
    fn kx_pole_detection() {
        assert!(matches!(
            rational_function_case("ID-KX", 3, &int(-2)),
            Err(Error::PoleSample)
        ));
        let ok = rational_function_case("ID-KX", 0, &int(5)).unwrap();
        assert_eq!(ok.lhs, ExactRational::new(1, 5));
        assert!(ok.pass);
    }

    #[test]
    fn rational_function_certification() {
        for n in [0u64, 3, 7] {
            assert!(verify_rational_function_identity("ID-KX", n, n as usize + 2, DEFAULT_SEED)
                .unwrap());
            assert!(verify_rational_function_identity("ID-CYID", n, n as usize + 2, DEFAULT_SEED)
                .unwrap());
        }
        assert!(verify_rational_function_identity("ID-21", 5, 8, DEFAULT_SEED).unwrap());
        assert!(matches!(
            verify_rational_function_identity("ID-HENG", 3, 5, DEFAULT_SEED),
            Err(Error::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn unknown_and_out_of_range() {
        assert!(matches!(verify_identity("ID-NOPE", 3, 0), Err(Error::UnknownIdentity(_))));
        assert!(matches!(
            verify_identity("ID-CYID", 26, 0),
            Err(Error::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn small_sweep_all_pass() {
        let report = sweep_identities(10, DEFAULT_SEED);
        assert!(report.all_pass);
        assert_eq!(report.per_identity.len(), 17);
        // vacuous sweep still passes
        assert!(sweep_identities(0, DEFAULT_SEED).all_pass);
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = sweep_identities(6, DEFAULT_SEED);
        let b = sweep_identities(6, DEFAULT_SEED);
        for (x, y) in a.per_identity.iter().zip(b.per_identity.iter()) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.cases, y.cases);
            assert_eq!(x.failures, y.failures);
        }
    }
}
