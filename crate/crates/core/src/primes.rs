//! Primality, prime sweeps, and square roots mod p.

use crate::arith::{mul_mod, pow_mod};

/// Deterministic Miller-Rabin for u64. The seven-base set below is a proven
/// certificate for all n < 3.4e14 and widely used beyond; our sweeps stay
/// far under that.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &[2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in [lo, hi], ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// Primes p in [lo, hi] with p = 1 (mod 3), the splitting class for x^2 + 3y^2.
pub fn primes_1_mod_3(lo: u64, hi: u64) -> Vec<u64> {
    primes_in(lo, hi).into_iter().filter(|&p| p % 3 == 1).collect()
}

/// Square root of a mod odd prime p via Tonelli-Shanks.
/// Returns the root in [0, p) or None when a is a non-residue.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    // Euler criterion first; also rejects non-residues.
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    // p = 1 mod 4: full Tonelli-Shanks.
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    // Any quadratic non-residue serves as the twiddle base.
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        // Least i with t^(2^i) = 1.
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primality() {
        let known: Vec<u64> = vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
        for n in 0..50u64 {
            assert_eq!(is_prime(n), known.contains(&n), "n = {n}");
        }
    }

    #[test]
    fn larger_primality() {
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(2_147_483_649));
        assert!(is_prime(99991));
        assert!(!is_prime(99991 * 99989));
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn residue_class_sweep() {
        let ps = primes_1_mod_3(7, 100);
        assert_eq!(ps, vec![7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97]);
        assert_eq!(primes_in(7, 7), vec![7]);
        assert!(primes_in(8, 10).is_empty());
    }

    #[test]
    fn sqrt_mod_roundtrip() {
        for &p in &[3u64, 5, 7, 13, 17, 97, 193, 65537, 99991] {
            let mut residues = 0;
            for a in 0..p.min(200) {
                if let Some(r) = sqrt_mod(a, p) {
                    assert_eq!(mul_mod(r, r, p), a % p, "p={p} a={a}");
                    residues += 1;
                }
            }
            assert!(residues > 0);
        }
        // -3 is a residue mod p exactly when p = 1 mod 3 (p > 3).
        for p in primes_in(5, 200) {
            let has = sqrt_mod(p - 3, p).is_some();
            assert_eq!(has, p % 3 == 1, "p = {p}");
        }
    }
}
