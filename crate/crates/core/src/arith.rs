//! Small-word modular arithmetic: the residue layer everything reduces into.
//!
//! Moduli here are prime powers p^k that fit in u64 (all arithmetic widens to
//! u128), while exact values live in [`crate::rational`] until reduction.

/// (a + b) mod m, safe for any a, b < m <= u64::MAX.
#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

/// (a - b) mod m, safe for any a, b < m.
#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (m - b)
    }
}

/// (a * b) mod m via u128 widening.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m by binary exponentiation. 0^0 = 1.
pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Extended gcd on signed words: returns (g, s, t) with a*s + b*t = g >= 0.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of a mod m, or None when gcd(a, m) > 1. Works for non-prime m
/// (needed for moduli p^k).
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, s, _) = ext_gcd((a % m) as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(s.rem_euclid(m as i128) as u64)
}

/// Largest e with d^e dividing n; n > 0, d > 1.
pub fn multiplicity(mut n: u64, d: u64) -> u32 {
    debug_assert!(n > 0 && d > 1);
    let mut e = 0;
    while n % d == 0 {
        n /= d;
        e += 1;
    }
    e
}
