//! Combinatorial primitives: binomials (integer and rational upper argument),
//! factorials, rising factorials, harmonic numbers, Fermat quotients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::ExactRational;

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=n {
        out *= i;
    }
    out
}

/// C(n, m) with the usual conventions: 0 for m < 0, and for m > n when n >= 0.
/// A negative upper argument uses the falling-factorial definition
/// (e.g. C(-2, 3) = -4), matching the generalized binomial on integers.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if m < 0 || (n >= 0 && m > n) {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..m {
        num *= n - i;
    }
    num / factorial(m as u64)
}

/// Generalized C(a, m) for rational a: falling factorial over m!.
pub fn binomial_rat(a: &ExactRational, m: u64) -> ExactRational {
    let mut num = ExactRational::one();
    for i in 0..m {
        num *= &(a - &ExactRational::from(i));
    }
    num / ExactRational::from_bigint(factorial(m))
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
pub fn rising_factorial(a: &ExactRational, n: u64) -> ExactRational {
    let mut out = ExactRational::one();
    for i in 0..n {
        out *= &(a + &ExactRational::from(i));
    }
    out
}

/// Harmonic number H_n (order 1) or H_n^(2) (order 2); H_0 = 0.
pub fn harmonic(n: u64, order: u32) -> ExactRational {
    assert!(order == 1 || order == 2, "only orders 1 and 2 are used");
    let mut out = ExactRational::zero();
    for k in 1..=n {
        out += &ExactRational::from_int(k as i64).pow(order as i32).pow(-1);
    }
    out
}

/// Fermat quotient q_p(a) = (a^{p-1} - 1)/p, an exact integer.
pub fn fermat_quotient(a: i64, p: u64) -> Result<ExactRational, Error> {
    if a.rem_euclid(p as i64) == 0 {
        return Err(Error::BaseDivisible { a, p });
    }
    let power = BigInt::from(a).pow((p - 1) as u32);
    Ok(ExactRational::new(power - 1, BigInt::from(p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(-2, 3), BigInt::from(-4)); // (-2)(-3)(-4)/6
    }

    #[test]
    fn binomial_factorial_crosscheck() {
        for n in 0..=60i64 {
            for m in 0..=n {
                let via_fact =
                    factorial(n as u64) / (factorial(m as u64) * factorial((n - m) as u64));
                assert_eq!(binomial(n, m), via_fact, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn rational_binomials() {
        // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(binomial_rat(&ExactRational::ratio(1, 2), 2), ExactRational::ratio(-1, 8));
        // C(-1/2, n) = (-1)^n C(2n,n)/4^n
        for n in 0..12u64 {
            let lhs = binomial_rat(&ExactRational::ratio(-1, 2), n);
            let rhs = ExactRational::from_bigint(binomial(2 * n as i64, n as i64))
                * ExactRational::ratio(-1, 4).pow(n as i32);
            assert_eq!(lhs, rhs, "n={n}");
        }
        assert_eq!(binomial_rat(&ExactRational::from_int(8), 4), ExactRational::from_int(70));
    }

    #[test]
    fn rising_factorials() {
        assert_eq!(rising_factorial(&ExactRational::one(), 5), ExactRational::from_int(120));
        assert_eq!(rising_factorial(&ExactRational::ratio(1, 3), 2), ExactRational::ratio(4, 9));
        assert_eq!(rising_factorial(&ExactRational::ratio(-7, 2), 0), ExactRational::one());
        // (2k,k) central binomial via 4^k (1/2)_k / (1)_k
        for k in 0..10u64 {
            let lhs = ExactRational::from_int(4).pow(k as i32)
                * rising_factorial(&ExactRational::ratio(1, 2), k)
                / rising_factorial(&ExactRational::one(), k);
            assert_eq!(lhs, ExactRational::from_bigint(binomial(2 * k as i64, k as i64)));
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(0, 1), ExactRational::zero());
        assert_eq!(harmonic(6, 1), ExactRational::ratio(49, 20));
        assert_eq!(harmonic(2, 2), ExactRational::ratio(5, 4));
    }

    #[test]
    fn fermat_quotients() {
        assert_eq!(fermat_quotient(2, 7).unwrap(), ExactRational::from_int(9));
        assert_eq!(fermat_quotient(3, 13).unwrap(), ExactRational::from_int(40880));
        assert_eq!(fermat_quotient(7, 7), Err(Error::BaseDivisible { a: 7, p: 7 }));
        assert_eq!(fermat_quotient(-2, 5).unwrap(), ExactRational::from_int(3));
    }
}
