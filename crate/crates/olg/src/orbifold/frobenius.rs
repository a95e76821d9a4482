//! Exhaustive check of the `G`-Frobenius axioms on a basis of `H`.

use serde::Serialize;

use crate::cyclo::Cyclotomic;
use crate::linalg;
use crate::poly::GroupElement;

use super::{BasisRef, Element, OrbifoldAlgebra};

#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    /// Axiom group, 1 to 6.
    pub group: u8,
    pub name: &'static str,
    /// Number of instances evaluated.
    pub checked: usize,
    /// First failing instance with both sides, if any.
    pub witness: Option<String>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    pub results: Vec<AxiomResult>,
}

impl FrobeniusReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.results.iter().filter(|r| !r.passed()).collect()
    }

    /// True when every axiom of group `k` passed.
    pub fn group_passed(&self, k: u8) -> bool {
        self.results.iter().filter(|r| r.group == k).all(AxiomResult::passed)
    }
}

struct Checker {
    results: Vec<AxiomResult>,
}

impl Checker {
    /// Runs `f` over `items` in parallel; `f` returns a witness on failure.
    fn run<T: Send>(&mut self, group: u8, name: &'static str, items: Vec<T>, f: impl Fn(T) -> Option<String> + Sync + Send) {
        let checked = items.len();
        let witness = crate::par::map(items, f).into_iter().flatten().next();
        self.results.push(AxiomResult { group, name, checked, witness });
    }
}

fn pairs(v: &[BasisRef]) -> Vec<(BasisRef, BasisRef)> {
    v.iter().flat_map(|&a| v.iter().map(move |&b| (a, b))).collect()
}

/// Checks every axiom on all basis vectors, pairs and triples.
pub fn check_g_frobenius(alg: &OrbifoldAlgebra) -> FrobeniusReport {
    let basis: Vec<BasisRef> = alg.basis().to_vec();
    let elems: Vec<GroupElement> = alg.group().elements().to_vec();
    let e = alg.identity_sector();
    let be = |r: BasisRef| alg.basis_element(r);
    let mut ck = Checker { results: Vec::new() };
    let show = |x: &Element| alg.describe(x);

    ck.run(1, "sector compatibility", pairs(&basis), |(a, b)| {
        let p = alg.cup(&be(a), &be(b));
        let target = alg.group().index_of(&alg.sectors[a.0].g.mul(&alg.sectors[b.0].g))?;
        let stray: Vec<usize> = p.support().into_iter().filter(|&s| s != target).collect();
        (!stray.is_empty()).then(|| format!("{} ∪ {} = {}", alg.basis_label(a), alg.basis_label(b), show(&p)))
    });
    let unit = alg.unit();
    ck.run(1, "unit", basis.clone(), |a| {
        let x = be(a);
        let l = alg.cup(&unit, &x);
        let r = alg.cup(&x, &unit);
        (l != x || r != x).then(|| format!("α = {}: 1∪α = {}, α∪1 = {}", alg.basis_label(a), show(&l), show(&r)))
    });
    let triples: Vec<(BasisRef, BasisRef)> = pairs(&basis);
    ck.run(1, "associativity", triples, |(a, b)| {
        let ab = alg.cup(&be(a), &be(b));
        for &c in &basis {
            let l = alg.cup(&ab, &be(c));
            let r = alg.cup(&be(a), &alg.cup(&be(b), &be(c)));
            if l != r {
                return Some(format!(
                    "({}, {}, {}): (αβ)γ = {}, α(βγ) = {}",
                    alg.basis_label(a),
                    alg.basis_label(b),
                    alg.basis_label(c),
                    show(&l),
                    show(&r)
                ));
            }
        }
        None
    });
    ck.run(1, "parity", pairs(&basis), |(a, b)| {
        let p = alg.cup(&be(a), &be(b));
        let want = (alg.parity(a) + alg.parity(b)) % 2;
        p.support()
            .into_iter()
            .find(|&s| alg.sectors[s].parity != want)
            .map(|s| format!("{} ∪ {} lands in odd/even mismatch sector [{}]", alg.basis_label(a), alg.basis_label(b), alg.sectors[s].g))
    });

    let gpairs: Vec<(GroupElement, GroupElement)> =
        elems.iter().flat_map(|g| elems.iter().map(move |h| (g.clone(), h.clone()))).collect();
    ck.run(2, "action is a homomorphism", gpairs.clone(), |(g, h)| {
        let gh = g.mul(&h);
        for &a in &basis {
            let l = alg.group_action(&g, &alg.group_action(&h, &be(a)));
            let r = alg.group_action(&gh, &be(a));
            if l != r {
                return Some(format!("g = ({g}), h = ({h}), α = {}: ρ(g)ρ(h)α = {}, ρ(gh)α = {}", alg.basis_label(a), show(&l), show(&r)));
            }
        }
        None
    });
    ck.run(2, "action on own sector is χ^-1", basis.clone(), |a| {
        let g = &alg.sectors[a.0].g;
        let l = alg.group_action(g, &be(a));
        let r = be(a).scale(&(&Cyclotomic::one() / &g.chi()));
        (l != r).then(|| format!("α = {}: ρ(g)α = {}, χ(g)^-1 α = {}", alg.basis_label(a), show(&l), show(&r)))
    });
    ck.run(2, "unit is invariant", elems.clone(), |g| {
        let l = alg.group_action(&g, &unit);
        (l != unit).then(|| format!("g = ({g}): ρ(g)1 = {}", show(&l)))
    });
    ck.run(2, "cup is equivariant", elems.clone(), |g| {
        for (a, b) in pairs(&basis) {
            let l = alg.group_action(&g, &alg.cup(&be(a), &be(b)));
            let r = alg.cup(&alg.group_action(&g, &be(a)), &alg.group_action(&g, &be(b)));
            if l != r {
                return Some(format!(
                    "g = ({g}), α = {}, β = {}: ρ(α∪β) = {}, ρα∪ρβ = {}",
                    alg.basis_label(a),
                    alg.basis_label(b),
                    show(&l),
                    show(&r)
                ));
            }
        }
        None
    });

    ck.run(3, "pairing vanishes off inverse sectors", pairs(&basis), |(a, b)| {
        let prod = alg.sectors[a.0].g.mul(&alg.sectors[b.0].g);
        if prod.is_identity() {
            return None;
        }
        let v = alg.pairing_eta(&be(a), &be(b));
        (!v.is_zero()).then(|| format!("η({}, {}) = {v}", alg.basis_label(a), alg.basis_label(b)))
    });
    ck.run(3, "pairing is χ^-2 equivariant", elems.clone(), |g| {
        let chi2 = &Cyclotomic::one() / &(&g.chi() * &g.chi());
        for (a, b) in pairs(&basis) {
            let l = alg.pairing_eta(&alg.group_action(&g, &be(a)), &alg.group_action(&g, &be(b)));
            let r = &chi2 * &alg.pairing_eta(&be(a), &be(b));
            if l != r {
                return Some(format!("g = ({g}), α = {}, β = {}: {l} vs {r}", alg.basis_label(a), alg.basis_label(b)));
            }
        }
        None
    });
    ck.run(3, "pairing is non-degenerate", vec![()], |_| {
        let gram = alg.gram_matrix();
        let r = linalg::rank(&gram);
        (r != alg.dim()).then(|| format!("Gram matrix has rank {r} < {}", alg.dim()))
    });

    ck.run(4, "Frobenius compatibility", pairs(&basis), |(a, b)| {
        let ab = alg.cup(&be(a), &be(b));
        for &c in &basis {
            let l = alg.pairing_eta(&ab, &be(c));
            let r = alg.pairing_eta(&be(a), &alg.cup(&be(b), &be(c)));
            if l != r {
                return Some(format!(
                    "({}, {}, {}): η(αβ,γ) = {l}, η(α,βγ) = {r}",
                    alg.basis_label(a),
                    alg.basis_label(b),
                    alg.basis_label(c)
                ));
            }
        }
        None
    });

    ck.run(5, "twisted commutativity", pairs(&basis), |(a, b)| {
        let g = &alg.sectors[a.0].g;
        let l = alg.cup(&be(a), &alg.group_action(&g.inv(), &be(b)));
        let mut r = alg.cup(&be(b), &be(a));
        if alg.parity(a) * alg.parity(b) == 1 {
            r = r.scale(&Cyclotomic::from_int(-1));
        }
        (l != r).then(|| {
            format!("α = {}, β = {}: α∪ρ(g^-1)β = {}, ±β∪α = {}", alg.basis_label(a), alg.basis_label(b), show(&l), show(&r))
        })
    });

    let e_basis: Vec<BasisRef> = basis.iter().copied().filter(|r| r.0 == e).collect();
    let trace_items: Vec<(BasisRef, GroupElement, GroupElement)> = e_basis
        .iter()
        .flat_map(|&a| gpairs.iter().map(move |(g, h)| (a, g.clone(), h.clone())))
        .collect();
    ck.run(6, "projective trace", trace_items, |(a, g, h)| {
        let alpha = be(a);
        let sg = alg.sector_index(&g).ok()?;
        let sh = alg.sector_index(&h).ok()?;
        let lhs = &h.chi() * &supertrace(alg, sg, |x| alg.cup(&alpha, &alg.group_action(&h, &x)));
        let ginv = g.inv();
        let rhs = &(&Cyclotomic::one() / &g.chi()) * &supertrace(alg, sh, |x| alg.group_action(&ginv, &alg.cup(&alpha, &x)));
        (lhs != rhs).then(|| format!("α = {}, g = ({g}), h = ({h}): {lhs} vs {rhs}", alg.basis_label(a)))
    });

    FrobeniusReport { results: ck.results }
}

/// Supertrace of a linear map on `H_s`, with sign `(−1)^{parity}`.
fn supertrace(alg: &OrbifoldAlgebra, s: usize, f: impl Fn(Element) -> Element) -> Cyclotomic {
    let sec = &alg.sectors[s];
    let mut tr = Cyclotomic::zero();
    for k in 0..sec.dim() {
        let img = f(alg.basis_element((s, k)));
        tr += &img.part(s).coeffs[k];
    }
    if sec.parity == 1 {
        -tr
    } else {
        tr
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invertible::Invertible;

    fn check(inv: &Invertible, group: &crate::invertible::SymmetryGroup) {
        let alg = OrbifoldAlgebra::new(inv, group).unwrap();
        let rep = check_g_frobenius(&alg);
        for r in rep.failures() {
            eprintln!("{} {}: {:?}", r.group, r.name, r.witness);
        }
        assert!(rep.passed(), "{}", inv.polynomial());
    }

    #[test]
    fn desk_cases() {
        for w in ["x1^3", "x1^2*x2 + x2^2*x1", "x1^2*x2 + x2^2", "x1^3 + x2^3"] {
            let inv = Invertible::parse(w).unwrap();
            check(&inv, &inv.symmetry_group());
        }
        let inv = Invertible::parse("x1^3 + x2^3").unwrap();
        check(&inv, &inv.sl_subgroup());
    }
}
