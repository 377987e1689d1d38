use num_complex::Complex64;
use proptest::prelude::*;

use cskit::{CycScalar, HalfExpLaurent, Laurent};

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..6).prop_map(|terms| Laurent::from_terms(terms))
}

fn half() -> impl Strategy<Value = HalfExpLaurent> {
    prop::collection::vec((-5i64..=5, -9i64..=9), 0..6).prop_map(HalfExpLaurent::from_half_terms)
}

fn unit_point() -> impl Strategy<Value = Complex64> {
    (0.0..std::f64::consts::TAU, 0.5f64..1.5).prop_map(|(a, m)| Complex64::from_polar(m, a))
}

fn cyc(order: u32) -> impl Strategy<Value = CycScalar> {
    prop::collection::vec(-4i64..=4, (order / 2) as usize).prop_map(move |c| CycScalar::from_coeffs(order, &c))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Laurent::zero());
        prop_assert_eq!(&a * &Laurent::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent(), x in unit_point()) {
        let prod = (&a * &b).eval(x);
        prop_assert!((prod - a.eval(x) * b.eval(x)).norm() < 1e-6 * (1.0 + prod.norm()));
        let sum = (&a + &b).eval(x);
        prop_assert!((sum - a.eval(x) - b.eval(x)).norm() < 1e-8 * (1.0 + sum.norm()));
    }

    #[test]
    fn half_exponent_text_round_trips(p in half()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<HalfExpLaurent>().unwrap(), p);
    }

    #[test]
    fn root_evaluation_is_multiplicative(a in half(), b in half(), r in 2u32..12) {
        let lhs = (&a * &b).eval_at_root(r);
        let rhs = a.eval_at_root(r) * b.eval_at_root(r);
        prop_assert!((lhs - rhs).norm() < 1e-8 * (1.0 + lhs.norm()));
    }

    #[test]
    fn cyclotomic_embedding_is_a_ring_map((a, b) in (2u32..9).prop_flat_map(|r| (cyc(4 * r), cyc(4 * r)))) {
        prop_assert!(((&a * &b).embed() - a.embed() * b.embed()).norm() < 1e-9);
        prop_assert!(((&a + &b).embed() - a.embed() - b.embed()).norm() < 1e-12);
        prop_assert_eq!(&(&a * &b) * &a, &a * &(&b * &a));
    }

    #[test]
    fn root_powers_multiply(order in (1u32..12).prop_map(|k| 2 * k), j in -40i64..40, k in -40i64..40) {
        prop_assert_eq!(&CycScalar::root_power(order, j) * &CycScalar::root_power(order, k), CycScalar::root_power(order, j + k));
    }
}
