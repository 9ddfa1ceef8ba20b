//! Property-based invariants for the arithmetic core and the word
//! statistics.

use eulerian::bijections::{
    phi_nonsmooth, phi_nonsmooth_inv, phi_partition, phi_smooth, phi_smooth_inv, psi_partition,
};
use eulerian::poly::Subst;
use eulerian::{IntPolynomial, Word};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-50i64..50, 0..8).prop_map(|cs| IntPolynomial::from_i64s(&cs))
}

/// A word over an arbitrary ground set: a shuffled subset of 1..=8 with
/// random signs.
fn word() -> impl Strategy<Value = Word> {
    prop::sample::subsequence((1i32..=8).collect::<Vec<_>>(), 1..=8)
        .prop_shuffle()
        .prop_flat_map(|vals| {
            let n = vals.len();
            (Just(vals), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(vals, signs)| {
            Word::new(
                vals.into_iter()
                    .zip(signs)
                    .map(|(v, neg)| if neg { -v } else { v })
                    .collect(),
            )
            .expect("distinct absolute values")
        })
}

/// A signed permutation of [n] for 2 <= n <= 6.
fn signed_perm() -> impl Strategy<Value = Word> {
    (2usize..=6)
        .prop_flat_map(|n| {
            (
                Just((1i32..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(vals, signs)| {
            Word::new(
                vals.into_iter()
                    .zip(signs)
                    .map(|(v, neg)| if neg { -v } else { v })
                    .collect(),
            )
            .expect("permutation")
        })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), IntPolynomial::zero());
    }

    #[test]
    fn reverse_is_an_involution(a in poly(), pad in 0usize..4) {
        let d = a.degree().unwrap_or(0) + pad;
        let reversed = a.reverse(d).unwrap();
        prop_assert_eq!(reversed.reverse(d).unwrap(), a);
    }

    #[test]
    fn negation_substitution_is_an_involution(a in poly()) {
        prop_assert_eq!(a.substitute(Subst::NegT).substitute(Subst::NegT), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in -9i64..9) {
        let x = BigInt::from(x);
        prop_assert_eq!(a.mul(&b).eval_int(&x), a.eval_int(&x) * b.eval_int(&x));
        prop_assert_eq!(a.add(&b).eval_int(&x), a.eval_int(&x) + b.eval_int(&x));
    }

    #[test]
    fn negating_a_word_complements_its_descents(w in word()) {
        prop_assert_eq!(w.des_b() + w.negate().des_b(), w.len());
    }

    #[test]
    fn signed_reduction_is_idempotent_and_statistic_preserving(w in word()) {
        let r = w.red_signed();
        prop_assert_eq!(r.red_signed(), r.clone());
        prop_assert_eq!(r.des_b(), w.des_b());
        prop_assert_eq!(r.des(), w.des());
    }

    #[test]
    fn plain_reduction_preserves_descents(w in word()) {
        let positive = Word::new(w.entries().iter().map(|e| e.abs()).collect()).unwrap();
        prop_assert_eq!(positive.red_plain().unwrap().des(), positive.des());
    }

    #[test]
    fn smooth_split_round_trips(w in signed_perm()) {
        if w.is_smooth().unwrap() {
            let out = phi_smooth(&w).unwrap();
            prop_assert_eq!(out.des_d(), w.des_b());
            prop_assert_eq!(phi_smooth_inv(&out).unwrap(), w);
        } else {
            let (u, v) = phi_nonsmooth(&w).unwrap();
            prop_assert_eq!(phi_nonsmooth_inv(u, &v).unwrap(), w);
        }
    }

    #[test]
    fn partition_round_trips(w in signed_perm()) {
        let p = phi_partition(&w).unwrap();
        prop_assert_eq!(p.des_b_sum(), w.des_b());
        prop_assert_eq!(psi_partition(&p), w);
    }
}
