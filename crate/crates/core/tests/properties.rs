//! Property tests for the arithmetic substrate: reduction is a ring
//! homomorphism, valuations behave ultrametrically, cached sequences agree
//! with their definitions, and sampling is pure in the seed.

use franel::arith::{add_mod, mul_mod};
use franel::comb;
use franel::gammap::gamma_p_int;
use franel::identities::verify_identity;
use franel::padic::{congruent, prime_power, reduce_mod_pk};
use franel::quadform;
use franel::sequences::{self, SequenceCache};
use franel::ExactRational;
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![5u64, 7, 11, 13, 17, 19, 23])
}

proptest! {
    #[test]
    fn reduction_is_a_ring_homomorphism(
        p in small_prime(),
        k in 1u32..=3,
        an in -500i64..500, ad in 1i64..50,
        bn in -500i64..500, bd in 1i64..50,
    ) {
        prop_assume!(ad % p as i64 != 0 && bd % p as i64 != 0);
        let m = prime_power(p, k);
        let a = ExactRational::ratio(an, ad);
        let b = ExactRational::ratio(bn, bd);
        let ra = reduce_mod_pk(&a, p, k).unwrap().residue;
        let rb = reduce_mod_pk(&b, p, k).unwrap().residue;
        let sum = reduce_mod_pk(&(&a + &b), p, k).unwrap().residue;
        let prod = reduce_mod_pk(&(&a * &b), p, k).unwrap().residue;
        prop_assert_eq!(sum, add_mod(ra, rb, m));
        prop_assert_eq!(prod, mul_mod(ra, rb, m));
    }

    #[test]
    fn congruence_agrees_with_residue_equality(
        p in small_prime(),
        k in 1u32..=3,
        an in -500i64..500, ad in 1i64..50,
        bn in -500i64..500, bd in 1i64..50,
    ) {
        prop_assume!(ad % p as i64 != 0 && bd % p as i64 != 0);
        let a = ExactRational::ratio(an, ad);
        let b = ExactRational::ratio(bn, bd);
        let want = reduce_mod_pk(&a, p, k).unwrap().residue
            == reduce_mod_pk(&b, p, k).unwrap().residue;
        prop_assert_eq!(congruent(&a, &b, p, k).unwrap(), want);
    }

    #[test]
    fn valuation_is_multiplicative_and_ultrametric(
        p in small_prime(),
        an in -2000i64..2000, ad in 1i64..200,
        bn in -2000i64..2000, bd in 1i64..200,
    ) {
        prop_assume!(an != 0 && bn != 0);
        let a = ExactRational::ratio(an, ad);
        let b = ExactRational::ratio(bn, bd);
        let (va, vb) = (a.valuation(p).unwrap(), b.valuation(p).unwrap());
        prop_assert_eq!((&a * &b).valuation(p).unwrap(), va + vb);
        let s = &a + &b;
        if let Some(vs) = s.valuation(p) {
            prop_assert!(vs >= va.min(vb));
            if va != vb {
                prop_assert_eq!(vs, va.min(vb));
            }
        } else {
            // sum is zero: only possible when the valuations tie
            prop_assert_eq!(va, vb);
        }
    }

    #[test]
    fn pascal_rule_holds_for_all_integer_tops(n in -30i64..=30, k in 1i64..=25) {
        let lhs = comb::binomial(n, k);
        let rhs = comb::binomial(n - 1, k - 1) + comb::binomial(n - 1, k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cached_sequences_match_definitions(n in 0u64..=80) {
        let cache = SequenceCache::new();
        prop_assert_eq!(cache.harmonic(n, 1), comb::harmonic(n, 1));
        prop_assert_eq!(cache.harmonic(n, 2), comb::harmonic(n, 2));
        prop_assert_eq!(cache.franel_at(n), sequences::franel(n));
        prop_assert_eq!(cache.central_binomial(n), comb::binomial(2 * n as i64, n as i64));
    }

    #[test]
    fn cubed_binomial_recurrence(n in 1u64..=120) {
        let f = |i: u64| sequences::franel(i);
        let n_ = BigInt::from(n);
        let lhs = (&n_ + 1) * (&n_ + 1) * f(n + 1);
        let rhs = (7 * &n_ * &n_ + 7 * &n_ + 2) * f(n) + 8 * &n_ * &n_ * f(n - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_values_are_lipschitz_on_residue_classes(
        p in prop::sample::select(vec![5u64, 7, 13]),
        k in 1u32..=2,
        n in 1u64..=150,
    ) {
        let m = prime_power(p, k);
        prop_assert_eq!(gamma_p_int(n, p, k).residue, gamma_p_int(n + m, p, k).residue);
    }

    #[test]
    fn representation_solves_the_form(idx in 0usize..100) {
        let primes = franel::primes::primes_1_mod_3(7, 2000);
        let p = primes[idx % primes.len()];
        let r = quadform::represent(p).unwrap();
        prop_assert_eq!((r.x * r.x + 3 * (r.y * r.y) as i64) as u64, p);
        prop_assert_eq!(r.x.rem_euclid(3), 1);
        prop_assert!(r.y > 0);
    }

    #[test]
    fn identity_cases_are_pure_in_the_seed(
        seed in any::<u64>(),
        n in 0u64..=10,
        id in prop::sample::select(vec!["ID-21", "ID-KX", "ID-BARRUCAND"]),
    ) {
        let a = verify_identity(id, n, seed).unwrap();
        let b = verify_identity(id, n, seed).unwrap();
        prop_assert_eq!(a.len(), b.len());
        for (ca, cb) in a.iter().zip(&b) {
            prop_assert_eq!(&ca.params, &cb.params);
            prop_assert_eq!(&ca.lhs, &cb.lhs);
            prop_assert_eq!(&ca.rhs, &cb.rhs);
            prop_assert_eq!(ca.pass, cb.pass);
        }
    }
}
