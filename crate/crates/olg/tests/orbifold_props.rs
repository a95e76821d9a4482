mod common;

use proptest::prelude::*;

use olg::invertible::Invertible;
use olg::orbifold::OrbifoldAlgebra;

const SPECS: [&str; 7] = ["x1^3", "x1^5", "x1^2*x2 + x2^2*x1", "x1^2*x2 + x2^3", "x1^3 + x2^3", "x1^3*x2 + x2^2", "x1^4"];

fn algebra(w: usize, sl: bool) -> OrbifoldAlgebra {
    let inv = Invertible::parse(SPECS[w]).unwrap();
    let g = if sl { inv.sl_subgroup() } else { inv.symmetry_group() };
    OrbifoldAlgebra::new(&inv, &g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unit_and_associativity(w in 0..SPECS.len(), sl: bool, i: usize, j: usize, k: usize) {
        let alg = algebra(w, sl);
        let b = alg.basis().to_vec();
        let (i, j, k) = (i % b.len(), j % b.len(), k % b.len());
        let (x, y, z) = (alg.basis_element(b[i]), alg.basis_element(b[j]), alg.basis_element(b[k]));
        prop_assert_eq!(alg.cup(&alg.unit(), &x), x.clone());
        prop_assert_eq!(alg.cup(&x, &alg.unit()), x.clone());
        prop_assert_eq!(alg.cup(&alg.cup(&x, &y), &z), alg.cup(&x, &alg.cup(&y, &z)));
    }

    #[test]
    fn parity_is_additive(w in 0..SPECS.len(), sl: bool, i: usize, j: usize) {
        let alg = algebra(w, sl);
        let b = alg.basis().to_vec();
        let (i, j) = (i % b.len(), j % b.len());
        let p = alg.cup_basis(b[i], b[j]);
        for s in p.support() {
            prop_assert_eq!(alg.sectors()[s].parity, (alg.parity(b[i]) + alg.parity(b[j])) % 2);
        }
    }

    #[test]
    fn action_is_a_homomorphism_of_algebras(w in 0..SPECS.len(), sl: bool, i: usize, j: usize, h: usize) {
        let alg = algebra(w, sl);
        let g = &alg.group().elements()[h % alg.group().order()];
        let b = alg.basis().to_vec();
        let (i, j) = (i % b.len(), j % b.len());
        let (x, y) = (alg.basis_element(b[i]), alg.basis_element(b[j]));
        let lhs = alg.group_action(g, &alg.cup(&x, &y));
        let rhs = alg.cup(&alg.group_action(g, &x), &alg.group_action(g, &y));
        prop_assert_eq!(lhs, rhs);
    }
}
