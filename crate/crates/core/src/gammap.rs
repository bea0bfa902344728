//! The p-adic Gamma function on integers and p-adic integers (mod p^2),
//! with its functional equation, reflection, Taylor shift, and the
//! finite-difference derivative.
//!
//! Definition: G(0) = 1 and G(n) = (-1)^n * prod of k for 1 <= k < n, p not
//! dividing k. Values at rational p-adic integers come from the integer lift
//! in [1, p^k]; 1-Lipschitz continuity makes that well-defined mod p^k.

use crate::arith::{inv_mod, mul_mod, sub_mod};
use crate::comb::factorial;
use crate::error::Error;
use crate::padic::{prime_power, reduce_mod_pk, PadicResidue};
use crate::rational::ExactRational;
use crate::sequences::SequenceCache;

/// Incremental table of G(n) mod p^k; grows on demand.
pub struct GammaTable {
    pub p: u64,
    pub k: u32,
    m: u64,
    vals: Vec<u64>,
}

impl GammaTable {
    pub fn new(p: u64, k: u32) -> Self {
        let m = prime_power(p, k);
        // G(0) = 1 (convention), G(1) = -1 (empty product, sign).
        GammaTable { p, k, m, vals: vec![1 % m, m - 1] }
    }

    /// G(n) mod p^k. Ratio step: G(n+1)/G(n) = -n when p does not divide n, else -1.
    pub fn at(&mut self, n: u64) -> u64 {
        while self.vals.len() <= n as usize {
            let i = (self.vals.len() - 1) as u64;
            let step = if i % self.p == 0 { 1 } else { i % self.m };
            let next = mul_mod(*self.vals.last().unwrap(), self.m - step, self.m);
            self.vals.push(next);
        }
        self.vals[n as usize]
    }
}

/// G(n) mod p^k by direct product; the residue is always a unit.
pub fn gamma_p_int(n: u64, p: u64, k: u32) -> PadicResidue {
    let mut table = GammaTable::new(p, k);
    let r = table.at(n);
    debug_assert!(r % p != 0, "Gamma_p values are units");
    PadicResidue::from_residue(r, p, k)
}

/// Least nonnegative residue of alpha mod p (denominator must be prime to p).
pub fn least_residue(alpha: &ExactRational, p: u64) -> Result<u64, Error> {
    Ok(reduce_mod_pk(alpha, p, 1)?.residue)
}

/// a_0(x) in {1, ..., p} with x = a_0 (mod p).
pub fn a0(x: &ExactRational, p: u64) -> Result<u64, Error> {
    let r = least_residue(x, p)?;
    Ok(if r == 0 { p } else { r })
}

/// Integer lift of alpha into [1, p^k] (residue 0 lifts to p^k itself).
pub fn lift_to_pk(alpha: &ExactRational, p: u64, k: u32) -> Result<u64, Error> {
    let r = reduce_mod_pk(alpha, p, k)?.residue;
    Ok(if r == 0 { prime_power(p, k) } else { r })
}

/// G(alpha) mod p^k via the integer lift.
pub fn gamma_p(alpha: &ExactRational, p: u64, k: u32) -> Result<PadicResidue, Error> {
    Ok(gamma_p_int(lift_to_pk(alpha, p, k)?, p, k))
}

/// Wilson quotient ((p-1)! + 1)/p, an exact integer.
pub fn wilson_quotient(p: u64) -> ExactRational {
    ExactRational::new(factorial(p - 1) + 1, num_bigint::BigInt::from(p))
}

/// Finite-difference derivative ratio (G(alpha+p) - G(alpha)) / (p G(alpha))
/// mod p, computed from mod-p^2 evaluations.
pub fn gamma_p_derivative_ratio(alpha: &ExactRational, p: u64) -> Result<PadicResidue, Error> {
    let m2 = p * p;
    let n0 = lift_to_pk(alpha, p, 2)?;
    let mut table = GammaTable::new(p, 2);
    let g0 = table.at(n0);
    let g1 = table.at(n0 + p);
    let d = sub_mod(g1, g0, m2);
    debug_assert_eq!(d % p, 0, "Gamma_p is constant mod p on residue classes mod p");
    let ratio = mul_mod(d / p, inv_mod(g0 % p, p).expect("unit"), p);
    Ok(PadicResidue::from_residue(ratio, p, 1))
}

/// Candidate closed form 1 + H_{p - <-alpha>_p - 1} for the derivative ratio, mod p.
pub fn derivative_ratio_shifted_harmonic(
    alpha: &ExactRational,
    p: u64,
    cache: &SequenceCache,
) -> Result<PadicResidue, Error> {
    let na = least_residue(&-alpha, p)?;
    let idx = p - na - 1;
    let value = ExactRational::one() + cache.harmonic(idx, 1);
    reduce_mod_pk(&value, p, 1)
}

/// Candidate closed form H_{<-alpha>_p} - w_p (Wilson quotient), mod p.
pub fn derivative_ratio_wilson(
    alpha: &ExactRational,
    p: u64,
    cache: &SequenceCache,
) -> Result<PadicResidue, Error> {
    let na = least_residue(&-alpha, p)?;
    let value = cache.harmonic(na, 1) - wilson_quotient(p);
    reduce_mod_pk(&value, p, 1)
}

/// G(x+1) = ratio * G(x) mod p^k, ratio = -x for units and -1 when p | x.
pub fn check_functional_equation(x: &ExactRational, p: u64, k: u32) -> Result<bool, Error> {
    let m = prime_power(p, k);
    let g0 = gamma_p(x, p, k)?.residue;
    let g1 = gamma_p(&(x + &ExactRational::one()), p, k)?.residue;
    let want = if least_residue(x, p)? == 0 {
        // |x|_p < 1: ratio -1
        m - g0
    } else {
        let rx = reduce_mod_pk(x, p, k)?.residue;
        mul_mod(m - rx, g0, m)
    };
    Ok(g1 == want)
}

/// G(1-x) G(x) = (-1)^{a_0(x)} mod p^k.
pub fn check_reflection(x: &ExactRational, p: u64, k: u32) -> Result<bool, Error> {
    let m = prime_power(p, k);
    let g0 = gamma_p(x, p, k)?.residue;
    let g1 = gamma_p(&(ExactRational::one() - x), p, k)?.residue;
    let want = if a0(x, p)? % 2 == 1 { m - 1 } else { 1 };
    Ok(mul_mod(g0, g1, m) == want)
}

/// G(alpha + p s) = G(alpha) + p s G'(alpha) mod p^2 with the finite-difference G'.
pub fn check_taylor_shift(alpha: &ExactRational, s: &ExactRational, p: u64) -> Result<bool, Error> {
    let m2 = p * p;
    let shifted = alpha + &(ExactRational::from(p) * s);
    let lhs = gamma_p(&shifted, p, 2)?.residue;
    let n0 = lift_to_pk(alpha, p, 2)?;
    let mut table = GammaTable::new(p, 2);
    let g0 = table.at(n0);
    let dg = sub_mod(table.at(n0 + p), g0, m2); // p * G'(alpha) mod p^2
    let rs = reduce_mod_pk(s, p, 2)?.residue;
    let rhs = (g0 as u128 + mul_mod(rs, dg, m2) as u128) % m2 as u128;
    Ok(lhs == rhs as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn er(n: i64, d: i64) -> ExactRational {
        ExactRational::ratio(n, d)
    }

    #[test]
    fn integer_values() {
        assert_eq!(gamma_p_int(0, 7, 2).residue, 1);
        assert_eq!(gamma_p_int(1, 7, 2).residue, 48); // -1 mod 49
        assert_eq!(gamma_p_int(5, 5, 2).residue, 1); // -24 mod 25
        assert_eq!(gamma_p_int(10, 13, 2).residue, 37);
    }

    #[test]
    fn lifts() {
        assert_eq!(lift_to_pk(&er(1, 3), 7, 1).unwrap(), 5);
        assert_eq!(lift_to_pk(&er(1, 3), 7, 2).unwrap(), 33);
        assert_eq!(lift_to_pk(&ExactRational::zero(), 7, 2).unwrap(), 49);
        assert_eq!(lift_to_pk(&er(1, 7), 7, 2), Err(Error::NonIntegral { p: 7 }));
    }

    #[test]
    fn rational_evaluation() {
        assert_eq!(gamma_p(&er(1, 3), 7, 2).unwrap().residue, 25);
        // the lift really is the defining limit: nearby integer lifts agree
        assert_eq!(gamma_p(&er(1, 3), 7, 1).unwrap().residue, gamma_p_int(5, 7, 1).residue);
    }

    #[test]
    fn lipschitz_on_residue_classes() {
        // gamma_p_int(n1) = gamma_p_int(n2) mod p^k when n1 = n2 mod p^k
        for (p, k) in [(5u64, 1u32), (5, 2), (7, 1), (7, 2), (13, 1)] {
            let m = prime_power(p, k);
            let mut t = GammaTable::new(p, k);
            for n in 0..(2 * m).min(260) {
                assert_eq!(t.at(n), t.at(n + m), "p={p} k={k} n={n}");
            }
        }
    }

    #[test]
    fn functional_equation_examples() {
        assert!(check_functional_equation(&er(3, 1), 7, 2).unwrap());
        assert!(check_functional_equation(&er(7, 1), 7, 1).unwrap());
        assert!(check_functional_equation(&er(1, 3), 7, 2).unwrap());
        for x in 0..30i64 {
            assert!(check_functional_equation(&er(x, 1), 13, 2).unwrap());
        }
    }

    #[test]
    fn reflection_examples() {
        assert!(check_reflection(&er(1, 1), 7, 2).unwrap());
        assert!(check_reflection(&er(1, 2), 7, 1).unwrap());
        assert!(check_reflection(&er(2, 1), 5, 1).unwrap());
        for x in 1..=49i64 {
            assert!(check_reflection(&er(x, 1), 7, 2).unwrap(), "x={x}");
        }
    }

    #[test]
    fn taylor_shift_examples() {
        let cases: &[(i64, i64, i64, i64, u64)] =
            &[(1, 1, 0, 1, 7), (1, 1, 1, 1, 7), (1, 3, 2, 1, 13), (5, 6, 3, 2, 13)];
        for &(an, ad, sn, sd, p) in cases {
            assert!(check_taylor_shift(&er(an, ad), &er(sn, sd), p).unwrap());
        }
    }

    #[test]
    fn derivative_finite_difference() {
        // frozen: ratio at alpha = 2, p = 7 is 3; Wilson quotient w_7 = 5
        assert_eq!(gamma_p_derivative_ratio(&er(2, 1), 7).unwrap().residue, 3);
        assert_eq!(
            reduce_mod_pk(&wilson_quotient(7), 7, 1).unwrap().residue,
            5
        );
        // the Wilson-quotient closed form matches the finite difference everywhere
        let cache = SequenceCache::new();
        for p in [7u64, 13] {
            for a in 0..p {
                let fd = gamma_p_derivative_ratio(&ExactRational::from(a), p).unwrap();
                let wl = derivative_ratio_wilson(&ExactRational::from(a), p, &cache).unwrap();
                assert_eq!(fd.residue, wl.residue, "p={p} a={a}");
            }
        }
        // and at a genuinely rational argument
        let fd = gamma_p_derivative_ratio(&er(1, 3), 13).unwrap();
        let wl = derivative_ratio_wilson(&er(1, 3), 13, &cache).unwrap();
        assert_eq!(fd.residue, wl.residue);
    }
}
