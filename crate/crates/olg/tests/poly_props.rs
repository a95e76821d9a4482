mod common;

use proptest::prelude::*;

use olg::poly::{exterior_product, group_act, quantum_partial, ExteriorWord, GroupElement};

fn element(n: usize) -> impl Strategy<Value = GroupElement> {
    prop::collection::vec((0i64..12, prop::sample::select(vec![1i64, 2, 3, 4, 6, 12])), n)
        .prop_map(|v| GroupElement::from_fracs(&v))
}

fn word() -> impl Strategy<Value = ExteriorWord> {
    prop::collection::btree_set(0usize..5, 0..=3).prop_map(|s| ExteriorWord::sorted(s.into_iter().collect()))
}

proptest! {
    #[test]
    fn action_composes(g in element(3), h in element(3), f in common::polynomial(3, 5)) {
        let lhs = group_act(&g, &group_act(&h, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, group_act(&g.mul(&h), &f).unwrap());
    }

    #[test]
    fn twisted_leibniz(g in element(3), i in 0usize..3, a in common::polynomial(3, 4), b in common::polynomial(3, 4)) {
        let lhs = quantum_partial(&g, i, &(&a * &b));
        let rhs = &(&quantum_partial(&g, i, &a) * &group_act(&g.component(i), &b).unwrap()) + &(&a * &quantum_partial(&g, i, &b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exterior_product_is_associative(a in word(), b in word(), c in word()) {
        let left = exterior_product(&a, &b).and_then(|(s, ab)| exterior_product(&ab, &c).map(|(t, w)| (s * t, w)));
        let right = exterior_product(&b, &c).and_then(|(s, bc)| exterior_product(&a, &bc).map(|(t, w)| (s * t, w)));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exterior_product_is_graded_commutative(a in word(), b in word()) {
        let ab = exterior_product(&a, &b);
        let ba = exterior_product(&b, &a);
        let sign = if a.len() * b.len() % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(ab.map(|(s, w)| (s * sign, w)), ba);
    }
}
