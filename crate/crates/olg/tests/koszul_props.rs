mod common;

use proptest::prelude::*;

use olg::invertible::Invertible;
use olg::koszul::{koszul_curving, koszul_d};
use olg::poly::{ExteriorWord, KoszulElement, Polynomial};

fn cochain() -> impl Strategy<Value = (Invertible, KoszulElement)> {
    common::invertible().prop_flat_map(|inv| {
        let n = inv.nvars();
        let order = inv.symmetry_group().order();
        let term = (common::polynomial(n, 3), prop::collection::btree_set(0..n, 0..=n), 0..order);
        (Just(inv), prop::collection::vec(term, 1..=3))
    })
    .prop_map(|(inv, terms)| {
        let group = inv.symmetry_group();
        let mut c = KoszulElement::zero(inv.nvars());
        for (f, word, g) in terms {
            c.add_term(f, ExteriorWord::sorted(word.into_iter().collect()), group.elements()[g].clone());
        }
        (inv, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn differentials_square_to_zero_and_anticommute((inv, c) in cochain()) {
        let w: &Polynomial = inv.polynomial();
        prop_assert!(koszul_d(&koszul_d(&c)).is_zero());
        prop_assert!(koszul_curving(&koszul_curving(&c, w), w).is_zero());
        let anti = koszul_d(&koszul_curving(&c, w)).add(&koszul_curving(&koszul_d(&c), w));
        prop_assert!(anti.is_zero(), "{}", anti.pretty());
    }
}
