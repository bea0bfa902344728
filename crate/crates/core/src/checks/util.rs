//! Shared arithmetic helpers for check evaluators.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::comb;
use crate::rational::ExactRational;
use crate::sequences::SequenceCache;

/// Integer as an exact rational.
pub fn int(n: i64) -> ExactRational {
    ExactRational::from_int(n)
}

/// Binomial coefficient as an exact rational.
pub fn binom(n: i64, m: i64) -> ExactRational {
    ExactRational::from_bigint(comb::binomial(n, m))
}

/// Sum of `f(k)` for `k` in `lo..=hi` (empty when `lo > hi`).
pub fn rsum(lo: u64, hi: u64, mut f: impl FnMut(u64) -> ExactRational) -> ExactRational {
    let mut acc = ExactRational::zero();
    let mut k = lo;
    while k <= hi {
        acc += f(k);
        k += 1;
    }
    acc
}

/// Exact value of `sum_{k=0}^{p-1} w(k) * f_k / c^k` where `f` is the
/// cubed-binomial sequence, computed by clearing denominators: the numerator
/// is accumulated by Horner's rule over c, so the whole sum costs `p` big
/// multiplications instead of `p` rational reductions.
pub fn franel_weighted_sum(
    cache: &SequenceCache,
    p: u64,
    c: i64,
    mut w: impl FnMut(u64) -> i64,
) -> ExactRational {
    cache.with_franel(p - 1, |f| {
        let mut num = BigInt::zero();
        for k in 0..p {
            num = num * c + &f[k as usize] * w(k);
        }
        ExactRational::ratio(num, BigInt::from(c).pow(p as u32 - 1))
    })
}

/// `sum_{k=1}^{top} 4^k / (k^power * C(2k, k))`, the central-binomial tail
/// that shows up throughout the difference chains.
pub fn central_sum(cache: &SequenceCache, top: u64, power: u32) -> ExactRational {
    let mut acc = ExactRational::zero();
    let mut pow4 = ExactRational::one();
    for k in 1..=top {
        pow4 *= &int(4);
        let den = ExactRational::from_bigint(
            BigInt::from(k).pow(power) * cache.central_binomial(k),
        );
        acc += &pow4 / &den;
    }
    acc
}

/// (p/3)-signed value of the degree p-2 Bernoulli polynomial at the third
/// point — the constant the third/sixth-length harmonic and central-binomial
/// sums evaluate to.
pub fn b_third_signed(ctx: &super::CheckCtx) -> ExactRational {
    let third = ExactRational::new(1, 3);
    int(crate::sequences::legendre_p_over_3(ctx.p))
        * ctx.cache.bernoulli_poly_at(ctx.p - 2, &third)
}

/// `(-1)^n` as a rational sign.
pub fn sign(n: u64) -> ExactRational {
    if n % 2 == 0 {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}

/// `b^e` for integer base with u32 exponent.
/// lcm(1..=n) as a BigInt.
pub fn lcm_upto(n: u64) -> BigInt {
    use num_integer::Integer;
    use num_traits::One;
    let mut l = BigInt::one();
    for k in 2..=n {
        let kb = BigInt::from(k);
        let g = l.gcd(&kb);
        l = l / g * kb;
    }
    l
}

pub fn ipow(b: i64, e: u32) -> ExactRational {
    ExactRational::from_bigint(BigInt::from(b).pow(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_sum_matches_direct_evaluation() {
        let cache = SequenceCache::new();
        let p = 13u64;
        let fast = franel_weighted_sum(&cache, p, -4, |k| 3 * k as i64 + 2);
        let slow = rsum(0, p - 1, |k| {
            let f = ExactRational::from_bigint(cache.franel_at(k));
            int(3 * k as i64 + 2) * f / ipow(-4, k as u32)
        });
        assert_eq!(fast, slow);
    }

    #[test]
    fn central_sum_small_values() {
        let cache = SequenceCache::new();
        // k=1: 4/(1*2) = 2; k=2: 16/(4*6) = 2/3 => power=2 total 8/3.
        assert_eq!(central_sum(&cache, 2, 2), ExactRational::new(8, 3));
        // power=1: 2 + 16/(2*6) = 10/3.
        assert_eq!(central_sum(&cache, 2, 1), ExactRational::new(10, 3));
    }

    #[test]
    fn sign_alternates() {
        assert_eq!(sign(0), int(1));
        assert_eq!(sign(3), int(-1));
        assert_eq!(ipow(-4, 3), int(-64));
    }
}
