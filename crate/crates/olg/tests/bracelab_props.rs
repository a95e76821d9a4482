use proptest::prelude::*;

use olg::bracelab::{FiniteAlgebra, Lab, SuiteConfig};

const ALGEBRAS: [(usize, i64, Option<usize>); 5] = [(2, 2, None), (3, 3, None), (3, 2, None), (4, 3, Some(3)), (4, 1, Some(2))];

fn lab(k: usize) -> Lab {
    let (n, order, w) = ALGEBRAS[k];
    Lab::new(FiniteAlgebra::truncated_polynomial(n, order, w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn identities_hold_for_every_seed(k in 0..ALGEBRAS.len(), seed: u64) {
        let lab = lab(k);
        let report = olg::bracelab::run_suite(&lab, &SuiteConfig { samples: 3, seed, max_arity: 2 }).unwrap();
        for r in &report.results {
            prop_assert!(r.ok(), "{}: {} {:?}", report.algebra, r.name, r.witness);
        }
    }

    #[test]
    fn reynolds_output_is_invariant(k in 0..ALGEBRAS.len(), seed: u64, arity in 0usize..3) {
        let lab = lab(k);
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let sector = (seed % lab.group_order() as u64) as usize;
        let phi = lab.reynolds(&lab.random(arity, sector, &mut rng));
        prop_assert!(lab.is_invariant(&phi));
    }
}
