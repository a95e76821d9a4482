//! Shared proptest strategies.
#![allow(dead_code)]

use proptest::prelude::*;

use olg::cyclo::{rat, Cyclotomic};
use olg::invertible::{AtomKind, Invertible};
use olg::poly::{Monomial, Polynomial};

/// A cyclotomic number with small rational coefficients in `Q(ζ_m)`.
pub fn cyclotomic(m: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-4i64..=4, 1i64..=3), m as usize)
        .prop_map(move |c| Cyclotomic::new(m, &c.into_iter().map(|(n, d)| rat(n, d)).collect::<Vec<_>>()))
}

/// A polynomial in `n` variables with up to `terms` terms of degree at most 3 per variable.
pub fn polynomial(n: usize, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=3, n), -3i64..=3), 0..=terms).prop_map(move |ts| {
        let mut p = Polynomial::zero(n);
        for (e, c) in ts {
            p.add_term(Monomial(e), &Cyclotomic::from_int(c));
        }
        p
    })
}

/// Atom specifications on at most four variables, with exponents in `2..=4`.
pub fn atom_spec() -> impl Strategy<Value = Vec<(AtomKind, Vec<u32>)>> {
    let atom = prop_oneof![
        (2u32..=4).prop_map(|n| (AtomKind::Fermat, vec![n])),
        prop::collection::vec(2u32..=4, 2..=3).prop_map(|e| (AtomKind::Loop, e)),
        prop::collection::vec(2u32..=4, 2..=3).prop_map(|e| (AtomKind::Chain, e)),
    ];
    prop::collection::vec(atom, 1..=2).prop_filter("at most four variables", |s| s.iter().map(|(_, e)| e.len()).sum::<usize>() <= 4)
}

pub fn invertible() -> impl Strategy<Value = Invertible> {
    atom_spec().prop_map(|s| Invertible::from_atoms(&s).expect("generated atoms are invertible"))
}
