mod common;

use common::partition;
use majmeter_core::partitions::partitions_up_to;
use majmeter_core::tableaux::enumerate_standard;
use majmeter_core::BigRational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

#[test]
fn hook_multiset_identity_up_to_12() {
    for l in partitions_up_to(1, 12) {
        for n in [l.len(), l.size(), l.size() + 2] {
            let (a, b) = l.hook_multiset_identity(n).unwrap();
            assert_eq!(a, b, "{l} with n = {n}");
        }
    }
}

#[test]
fn counts_match_enumeration_up_to_12() {
    for l in partitions_up_to(1, 12) {
        let f = l.count_standard_tableaux().to_usize().unwrap();
        assert_eq!(enumerate_standard(&l, 12).unwrap().count(), f, "{l}");
    }
}

proptest! {
    #[test]
    fn frobenius_sums_and_conjugation(l in partition(1, 30)) {
        let fr = l.frobenius();
        let total: BigRational = fr.a.iter().chain(&fr.b).cloned().sum();
        prop_assert_eq!(total, BigRational::from_integer(l.size().into()));
        let fc = l.conjugate().frobenius();
        prop_assert_eq!(&fc.a, &fr.b);
        prop_assert_eq!(&fc.b, &fr.a);
        prop_assert_eq!(l.conjugate().conjugate(), l);
    }

    #[test]
    fn moments_two_routes(l in partition(1, 30), k in 1u32..9) {
        let via_frobenius = l.frobenius_moment(k);
        let via_descent = l.frobenius_moment_descent(k, l.size()).unwrap();
        prop_assert_eq!(&via_frobenius, &via_descent);
        if k == 1 {
            prop_assert_eq!(via_frobenius, BigRational::from_integer(l.size().into()));
        }
    }

    #[test]
    fn embedded_measure_moments(l in partition(1, 40), k in 0u32..7) {
        let mu = l.measure().unwrap();
        let n = l.size() as f64;
        let want = l.frobenius_moment_f64(k + 1) / n.powi(k as i32 + 1);
        prop_assert!((mu.moment(k) - want).abs() <= 1e-12, "{} vs {}", mu.moment(k), want);
        let w = l.thoma_embed().unwrap();
        prop_assert!(w.gamma().abs() < 1e-12);
        prop_assert!(!mu.support().any(|(x, _)| x.is_zero()));
    }

    #[test]
    fn hook_product_is_factorial(l in partition(1, 20)) {
        let f = l.count_standard_tableaux();
        let hooks: num_bigint::BigUint = l.hooks_flat().into_iter().map(num_bigint::BigUint::from).product();
        let fact: num_bigint::BigUint = (1..=l.size() as u64).map(num_bigint::BigUint::from).product();
        prop_assert_eq!(f * hooks, fact);
    }
}
