mod common;

use proptest::prelude::*;

use olg::invertible::Invertible;
use olg::poly::Polynomial;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_elements_preserve_w(inv in common::invertible()) {
        let g = inv.symmetry_group();
        prop_assert_eq!(num_bigint::BigInt::from(g.order()), inv.det());
        for e in g.elements() {
            prop_assert!(inv.is_symmetry(e), "({}) does not preserve {}", e, inv.polynomial());
        }
    }

    #[test]
    fn character_is_a_homomorphism(inv in common::invertible()) {
        let g = inv.symmetry_group();
        prop_assume!(g.order() <= 60);
        for a in g.elements() {
            for b in g.elements() {
                prop_assert_eq!(a.mul(b).chi(), &a.chi() * &b.chi());
            }
        }
    }

    #[test]
    fn transpose_is_an_involution(inv in common::invertible()) {
        let t = inv.transpose_mirror().unwrap();
        let back = t.transpose_mirror().unwrap();
        prop_assert_eq!(back.polynomial(), inv.polynomial());
        for w in [&inv, &t] {
            for row in w.exponent_matrix() {
                let s: olg::cyclo::Rational = row.iter().zip(w.weights()).map(|(&e, q)| q * olg::cyclo::rat(e as i64, 1)).sum();
                prop_assert_eq!(s, olg::cyclo::rat(1, 1));
            }
        }
    }

    #[test]
    fn atoms_reassemble(spec in common::atom_spec()) {
        let inv = Invertible::from_atoms(&spec).unwrap();
        let n = inv.nvars();
        let sum = inv.atoms().iter().fold(Polynomial::zero(n), |acc, a| &acc + &a.polynomial(n));
        prop_assert_eq!(&sum, inv.polynomial());
        let mut want: Vec<(String, usize)> = spec.iter().map(|(k, e)| (k.to_string(), e.len())).collect();
        let mut got: Vec<(String, usize)> = inv.atoms().iter().map(|a| (a.kind.to_string(), a.len())).collect();
        want.sort();
        got.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn canonical_relabelling_keeps_invariants(inv in common::invertible()) {
        let (c, _) = inv.canonical();
        prop_assert!(c.is_standard_order());
        prop_assert_eq!(c.det(), inv.det());
        prop_assert_eq!(c.milnor_number(), inv.milnor_number());
    }
}
