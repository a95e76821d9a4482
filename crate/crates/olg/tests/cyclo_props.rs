mod common;

use proptest::prelude::*;

use olg::cyclo::{quantum_bracket, root_of_unity, Cyclotomic, Phase};

fn modulus() -> impl Strategy<Value = u32> {
    1u32..=24
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in modulus().prop_flat_map(|m| (common::cyclotomic(m), common::cyclotomic(m), common::cyclotomic(m)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            let q = a.checked_div(&b).unwrap();
            prop_assert_eq!(&q * &b, a.clone());
        }
    }

    #[test]
    fn mixed_moduli_promote(a in common::cyclotomic(4), b in common::cyclotomic(6)) {
        let s = &a + &b;
        prop_assert_eq!(&s - &b, a.clone());
    }

    #[test]
    fn roots_of_unity_have_exact_order(m in 1i64..=24, k in 0i64..24) {
        let p = Phase::from_frac(k, m);
        let z = root_of_unity(&p);
        let order = p.order() as i64;
        prop_assert!(z.pow(order).is_one());
        for j in 1..order {
            prop_assert!(!z.pow(j).is_one());
        }
    }

    #[test]
    fn quantum_bracket_telescopes(gamma in 1u32..=12, m in 1i64..=12, k in 0i64..12) {
        let lambda = root_of_unity(&Phase::from_frac(k, m));
        let lhs = &quantum_bracket(gamma, &lambda).unwrap() * &(&lambda - &Cyclotomic::one());
        prop_assert_eq!(lhs, &lambda.pow(gamma as i64) - &Cyclotomic::one());
    }
}
