//! Special sequences: Franel numbers, their binomial-transform companions,
//! Bernoulli and Euler numbers, and a shared grow-on-demand cache.
//!
//! Free functions compute by direct summation (the definitional path); the
//! cache generates by recurrence for speed. Tests assert the two agree.

use std::collections::BTreeMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::comb::binomial;
use crate::rational::ExactRational;

/// f_n = sum_k C(n,k)^3 by direct summation.
pub fn franel(n: u64) -> BigInt {
    (0..=n as i64).map(|k| binomial(n as i64, k).pow(3)).sum()
}

/// g_n = sum_k C(n,k)^2 C(2k,k) by direct summation.
pub fn companion_g(n: u64) -> BigInt {
    (0..=n as i64)
        .map(|k| binomial(n as i64, k).pow(2) * binomial(2 * k, k))
        .sum()
}

/// (n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1} for all 1 <= n < N.
pub fn check_franel_recurrence(n_max: u64) -> bool {
    let mut f = vec![franel(0), franel(1)];
    for n in 1..n_max {
        let next = (BigInt::from(7 * n * n + 7 * n + 2) * &f[n as usize]
            + BigInt::from(8 * n * n) * &f[(n - 1) as usize])
            / BigInt::from((n + 1) * (n + 1));
        f.push(next);
    }
    (0..=n_max).all(|n| f[n as usize] == franel(n))
}

/// sum_k C(n,k) f_k = g_n for all 0 <= n <= N.
pub fn check_barrucand(n_max: u64) -> bool {
    let f: Vec<BigInt> = (0..=n_max).map(franel).collect();
    (0..=n_max).all(|n| {
        let lhs: BigInt = (0..=n as i64).map(|k| binomial(n as i64, k) * &f[k as usize]).sum();
        lhs == companion_g(n)
    })
}

/// +1 if p = 1 mod 3 else -1 (p prime > 3).
pub fn legendre_p_over_3(p: u64) -> i64 {
    assert!(p > 3 && p % 3 != 0);
    if p % 3 == 1 {
        1
    } else {
        -1
    }
}

/// Shared memo for everything the check evaluators consume repeatedly.
/// Populated on demand under a write lock; readers run concurrently.
pub struct SequenceCache {
    // f_0..f_N by recurrence
    franel: RwLock<Vec<BigInt>>,
    // B_0..B_M by the C(n+1,k)-recurrence (B_1 = -1/2)
    bernoulli: RwLock<Vec<ExactRational>>,
    // E_0..E_M secant numbers (odd entries zero)
    euler: RwLock<Vec<BigInt>>,
    // H_0..H_N and second-order H
    harmonic1: RwLock<Vec<ExactRational>>,
    harmonic2: RwLock<Vec<ExactRational>>,
    // C(2k,k) for k = 0..N
    central: RwLock<Vec<BigInt>>,
    // memoized B_n(x) keyed by (n, numer(x), denom(x))
    bpoly: RwLock<BTreeMap<(u64, BigInt, BigInt), ExactRational>>,
}

impl Default for SequenceCache {
    fn default() -> Self {
        Self::new()
    }
}

impl SequenceCache {
    pub fn new() -> Self {
        SequenceCache {
            franel: RwLock::new(vec![BigInt::one(), BigInt::from(2)]),
            bernoulli: RwLock::new(vec![ExactRational::one()]),
            euler: RwLock::new(vec![BigInt::one()]),
            harmonic1: RwLock::new(vec![ExactRational::zero()]),
            harmonic2: RwLock::new(vec![ExactRational::zero()]),
            central: RwLock::new(vec![BigInt::one()]),
            bpoly: RwLock::new(BTreeMap::new()),
        }
    }

    /// Run `body` on the slice f_0..f_n (recurrence-generated).
    pub fn with_franel<R>(&self, n: u64, body: impl FnOnce(&[BigInt]) -> R) -> R {
        {
            let have = self.franel.read().unwrap().len();
            if have <= n as usize {
                let mut f = self.franel.write().unwrap();
                while f.len() <= n as usize {
                    let m = (f.len() - 1) as u64; // recurrence index
                    let next = (BigInt::from(7 * m * m + 7 * m + 2) * &f[m as usize]
                        + BigInt::from(8 * m * m) * &f[(m - 1) as usize])
                        / BigInt::from((m + 1) * (m + 1));
                    f.push(next);
                }
            }
        }
        body(&self.franel.read().unwrap()[..=n as usize])
    }

    pub fn franel_at(&self, n: u64) -> BigInt {
        self.with_franel(n, |f| f[n as usize].clone())
    }

    /// H_n of the given order from the cached prefix.
    pub fn harmonic(&self, n: u64, order: u32) -> ExactRational {
        let cell = match order {
            1 => &self.harmonic1,
            2 => &self.harmonic2,
            _ => panic!("only harmonic orders 1 and 2 are used"),
        };
        {
            let have = cell.read().unwrap().len();
            if have <= n as usize {
                let mut h = cell.write().unwrap();
                while h.len() <= n as usize {
                    let k = h.len() as i64;
                    let next = h.last().unwrap()
                        + ExactRational::from_int(k).pow(order as i32).pow(-1);
                    h.push(next);
                }
            }
        }
        cell.read().unwrap()[n as usize].clone()
    }

    /// C(2k,k) from the cached prefix.
    pub fn central_binomial(&self, k: u64) -> BigInt {
        {
            let have = self.central.read().unwrap().len();
            if have <= k as usize {
                let mut c = self.central.write().unwrap();
                while c.len() <= k as usize {
                    let j = c.len() as u64; // C(2j,j) = C(2j-2,j-1) * 2(2j-1)/j
                    let next = c.last().unwrap() * BigInt::from(2 * (2 * j - 1)) / BigInt::from(j);
                    c.push(next);
                }
            }
        }
        self.central.read().unwrap()[k as usize].clone()
    }

    /// Bernoulli number B_n (B_1 = -1/2; odd n >= 3 gives 0).
    ///
    /// Even entries come from the integer tangent-number triangle
    /// (T_k = coefficient of x^(2k-1)/(2k-1)! in tan x) via
    /// B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)), so extending the table
    /// is pure integer arithmetic with one normalization per entry instead
    /// of a quadratic pile of rational reductions.
    pub fn bernoulli(&self, n: u64) -> ExactRational {
        {
            let have = self.bernoulli.read().unwrap().len();
            if have <= n as usize {
                let mut b = self.bernoulli.write().unwrap();
                if b.len() <= n as usize {
                    // rebuild with headroom so repeated small extensions stay cheap
                    let target = (n as usize).max(b.len() * 2).max(16);
                    let nn = (target / 2).max(1); // tangent numbers T_1..T_nn
                    let mut t: Vec<BigInt> = Vec::with_capacity(nn);
                    t.push(BigInt::one());
                    for i in 1..nn {
                        let next = &t[i - 1] * (i as u64);
                        t.push(next);
                    }
                    for k in 1..nn {
                        for j in k..nn {
                            t[j] = &t[j - 1] * ((j - k) as u64) + &t[j] * ((j - k + 2) as u64);
                        }
                    }
                    b.clear();
                    b.push(ExactRational::one());
                    for m in 1..=target {
                        if m == 1 {
                            b.push(ExactRational::ratio(-1, 2));
                        } else if m % 2 == 1 {
                            b.push(ExactRational::zero());
                        } else {
                            let k = m / 2;
                            let four_k = BigInt::one() << (2 * k);
                            let den = &four_k * (&four_k - 1u32);
                            let mut num = &t[k - 1] * (m as u64);
                            if k % 2 == 0 {
                                num = -num;
                            }
                            b.push(ExactRational::new(num, den));
                        }
                    }
                }
            }
        }
        self.bernoulli.read().unwrap()[n as usize].clone()
    }

    /// Euler number E_n in the secant convention (E_0 = 1, E_2 = -1, E_4 = 5);
    /// odd indices are 0.
    pub fn euler(&self, n: u64) -> BigInt {
        if n % 2 == 1 {
            return BigInt::zero();
        }
        {
            let have = self.euler.read().unwrap().len();
            if have <= (n / 2) as usize {
                let mut e = self.euler.write().unwrap();
                while e.len() <= (n / 2) as usize {
                    let m = 2 * e.len() as i64; // E_m = -sum_{j<m/2} C(m,2j) E_{2j}
                    let mut acc = BigInt::zero();
                    for (j, ej) in e.iter().enumerate() {
                        acc += binomial(m, 2 * j as i64) * ej;
                    }
                    e.push(-acc);
                }
            }
        }
        self.euler.read().unwrap()[(n / 2) as usize].clone()
    }

    /// Bernoulli polynomial value B_n(x) = sum_k C(n,k) B_k x^{n-k}.
    ///
    /// The sum is accumulated as a single integer over the common denominator
    /// of the B_k prefix (times denom(x)^n), so the whole evaluation costs n
    /// big multiplications with one normalization at the end instead of n
    /// rational reductions. Results are memoized per (n, x).
    pub fn bernoulli_poly_at(&self, n: u64, x: &ExactRational) -> ExactRational {
        let key = (n, x.numer().clone(), x.denom().clone());
        if let Some(v) = self.bpoly.read().unwrap().get(&key) {
            return v.clone();
        }
        self.bernoulli(n); // populate prefix
        let out = {
            let b = self.bernoulli.read().unwrap();
            let mut d = BigInt::one();
            for bk in b.iter().take(n as usize + 1) {
                d = d.lcm(bk.denom());
            }
            let (a, q) = (x.numer(), x.denom());
            let mut qpow = Vec::with_capacity(n as usize + 1); // q^k
            qpow.push(BigInt::one());
            for _ in 0..n {
                qpow.push(qpow.last().unwrap() * q);
            }
            // sum_k C(n,k) (num_k d/den_k) a^{n-k} q^k, run from k = n down
            let mut acc = BigInt::zero();
            let mut apow = BigInt::one(); // a^{n-k}
            let mut cnk = BigInt::one(); // C(n,k)
            for k in (0..=n).rev() {
                let bk = &b[k as usize];
                if !bk.is_zero() {
                    acc += &cnk * (bk.numer() * (&d / bk.denom())) * &apow * &qpow[k as usize];
                }
                apow *= a;
                if k > 0 {
                    cnk = cnk * k / (n - k + 1); // C(n,k-1), exact division
                }
            }
            ExactRational::new(acc, d * &qpow[n as usize])
        };
        self.bpoly.write().unwrap().insert(key, out.clone());
        out
    }
}
