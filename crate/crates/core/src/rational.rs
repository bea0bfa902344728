//! Exact rational arithmetic: the carrier type for every intermediate value.
//!
//! All congruence sides are computed here exactly and only reduced modulo p^k
//! at the very end (see [`crate::padic`]). The newtype pins the invariants we
//! rely on: lowest terms, positive denominator, zero as 0/1.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with denominator >= 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// num/den in lowest terms. Panics when den = 0.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ExactRational(BigRational::from_integer(n))
    }

    /// Alias of `new` kept for call-site readability with literal fractions.
    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::new(num, den)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Integer power; negative exponents invert (panics on 0^negative).
    pub fn pow(&self, e: i32) -> Self {
        ExactRational(Pow::pow(&self.0, e))
    }

    /// p-adic valuation nu_p(numerator) - nu_p(denominator); None encodes +infinity (zero).
    pub fn valuation(&self, p: u64) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let vn = bigint_multiplicity(self.numer(), p) as i64;
        let vd = bigint_multiplicity(self.denom(), p) as i64;
        Some(vn - vd)
    }
}

/// Multiplicity of p in n (n != 0).
pub(crate) fn bigint_multiplicity(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational renders "n/d", or just "n" when the denominator is 1.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<u64> for ExactRational {
    fn from(n: u64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, rhs.0))
            }
        }
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: ExactRational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let q = ExactRational::ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(ExactRational::zero().to_string(), "0");
        assert_eq!(ExactRational::from_int(7).to_string(), "7");
    }

    #[test]
    fn arithmetic() {
        let a = ExactRational::ratio(1, 3);
        let b = ExactRational::ratio(1, 6);
        assert_eq!(&a + &b, ExactRational::ratio(1, 2));
        assert_eq!(&a - &b, b);
        assert_eq!(&a * &b, ExactRational::ratio(1, 18));
        assert_eq!(&a / &b, ExactRational::from_int(2));
        assert_eq!(-&a, ExactRational::ratio(-1, 3));
    }

    #[test]
    fn powers() {
        let h = ExactRational::ratio(1, 2);
        assert_eq!(h.pow(3), ExactRational::ratio(1, 8));
        assert_eq!(h.pow(-2), ExactRational::from_int(4));
        assert_eq!(h.pow(0), ExactRational::one());
    }

    #[test]
    fn valuations() {
        // nu_7(49/3) = 2, nu_7(70) = 1, nu_5(0) = +inf
        assert_eq!(ExactRational::ratio(49, 3).valuation(7), Some(2));
        assert_eq!(ExactRational::from_int(70).valuation(7), Some(1));
        assert_eq!(ExactRational::zero().valuation(5), None);
        assert_eq!(ExactRational::ratio(3, 49).valuation(7), Some(-2));
        // multiplicative over nonzero values
        let a = ExactRational::ratio(14, 3);
        let b = ExactRational::ratio(21, 2);
        assert_eq!(
            (&a * &b).valuation(7).unwrap(),
            a.valuation(7).unwrap() + b.valuation(7).unwrap()
        );
    }

    #[test]
    fn summation() {
        let s: ExactRational = (1..=6).map(|k| ExactRational::ratio(1, k)).sum();
        assert_eq!(s, ExactRational::ratio(49, 20));
    }
}
