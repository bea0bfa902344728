//! Reduction of exact rationals modulo prime powers.
//!
//! A congruence "A = B (mod p^k)" is decided by reducing both exact sides to
//! canonical residues in [0, p^k) and comparing. Reduction fails (NonIntegral)
//! exactly when a side has p in its denominator, i.e. is not a p-adic integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{add_mod, inv_mod, mul_mod, multiplicity};
use crate::error::Error;
use crate::rational::ExactRational;

/// p-adic valuation as known after reduction mod p^k: exact when < k, else
/// only the bound "at least k" (residue 0 cannot distinguish 0 from p^k·unit).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Exact(u32),
    AtLeastK,
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Exact(v) => write!(f, "{v}"),
            Valuation::AtLeastK => write!(f, ">=k"),
        }
    }
}

/// A residue class mod p^k with its (clamped) valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicResidue {
    pub p: u64,
    pub k: u32,
    /// Canonical representative in [0, p^k).
    pub residue: u64,
    pub valuation: Valuation,
}

/// p^k as u64; panics on overflow (the sweep range keeps p^k far below 2^63).
pub fn prime_power(p: u64, k: u32) -> u64 {
    p.checked_pow(k).expect("p^k overflows u64")
}

impl PadicResidue {
    /// Wrap a raw residue, deriving the clamped valuation from it.
    pub fn from_residue(residue: u64, p: u64, k: u32) -> Self {
        let m = prime_power(p, k);
        let residue = residue % m;
        let valuation = if residue == 0 {
            Valuation::AtLeastK
        } else {
            Valuation::Exact(multiplicity(residue, p))
        };
        PadicResidue { p, k, residue, valuation }
    }

    pub fn modulus(&self) -> u64 {
        prime_power(self.p, self.k)
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.p, self.k), (other.p, other.k));
        Self::from_residue(add_mod(self.residue, other.residue, self.modulus()), self.p, self.k)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.p, self.k), (other.p, other.k));
        Self::from_residue(mul_mod(self.residue, other.residue, self.modulus()), self.p, self.k)
    }
}

/// BigInt mod m as u64 in [0, m), handling negatives.
pub(crate) fn bigint_mod_u64(n: &BigInt, m: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(m));
    debug_assert!(!r.is_negative());
    r.to_u64().expect("mod_floor result fits u64")
}

/// Reduce q mod p^k. Errors with NonIntegral when p divides q's denominator.
pub fn reduce_mod_pk(q: &ExactRational, p: u64, k: u32) -> Result<PadicResidue, Error> {
    let m = prime_power(p, k);
    let den = bigint_mod_u64(q.denom(), m);
    let den_inv = match inv_mod(den, m) {
        Some(inv) => inv,
        None => return Err(Error::NonIntegral { p }),
    };
    if q.numer().is_zero() {
        return Ok(PadicResidue { p, k, residue: 0, valuation: Valuation::AtLeastK });
    }
    let num = bigint_mod_u64(q.numer(), m);
    Ok(PadicResidue::from_residue(mul_mod(num, den_inv, m), p, k))
}

/// Does a = b (mod p^k)? Errors if either side is not p-integral.
pub fn congruent(a: &ExactRational, b: &ExactRational, p: u64, k: u32) -> Result<bool, Error> {
    Ok(reduce_mod_pk(a, p, k)?.residue == reduce_mod_pk(b, p, k)?.residue)
}
