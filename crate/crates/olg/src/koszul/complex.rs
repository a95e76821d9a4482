//! The twisted Koszul complex with curving, and closed representatives of
//! the sector generators `1_g`.

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::invertible::{AtomKind, Invertible};
use crate::poly::{exterior_product, quantum_partial, rho_prefix, ExteriorWord, GroupElement, KoszulElement, Monomial, Polynomial};

/// `∂_K(f e_I g) = Σ_i (x_i − ^g x_i) e_i f e_I g`.
pub fn koszul_d(c: &KoszulElement) -> KoszulElement {
    let n = c.nvars();
    let mut out = KoszulElement::zero(n);
    for (word, g, f) in c.terms() {
        for i in g.moving() {
            if word.contains(i) {
                continue;
            }
            let factor = Polynomial::term(Monomial::var(n, i), &Cyclotomic::one() - &g.lambda(i));
            let (sign, w) = exterior_product(&ExteriorWord::sorted(vec![i]), word).expect("i not in word");
            out.add_term((&factor * f).scale(&Cyclotomic::from_int(sign as i64)), w, g.clone());
        }
    }
    out
}

/// `d̃_W(f e_{i_1}⋯e_{i_p} g) = Σ_k (−1)^{k−1} f ρ_{i_k}(g)(∂^g_{x_{i_k}} W) e_{…î_k…} g`.
pub fn koszul_curving(c: &KoszulElement, w: &Polynomial) -> KoszulElement {
    let mut out = KoszulElement::zero(c.nvars());
    for (word, g, f) in c.terms() {
        for (k, &i) in word.indices().iter().enumerate() {
            let p = rho_prefix(g, i, &quantum_partial(g, i, w));
            if p.is_zero() {
                continue;
            }
            let rest: Vec<usize> = word.indices().iter().copied().filter(|&j| j != i).collect();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            out.add_term((f * &p).scale(&Cyclotomic::from_int(sign)), ExteriorWord::sorted(rest), g.clone());
        }
    }
    out
}

/// Outcome of [`check_closed`].
#[derive(Clone, Debug)]
pub struct ClosedCheck {
    pub closed: bool,
    /// `(∂_K + d̃_W)(c)`, zero exactly when `closed`.
    pub residual: KoszulElement,
}

/// Evaluates `(∂_K + d̃_W)(c)` exactly.
pub fn check_closed(c: &KoszulElement, w: &Polynomial) -> ClosedCheck {
    let residual = koszul_d(c).add(&koszul_curving(c, w));
    ClosedCheck { closed: residual.is_zero(), residual }
}

/// Pieces `(coefficient, word)` of one atom's representative, in global indices.
type Pieces = Vec<(Polynomial, Vec<usize>)>;

/// Sets of `s`-element index subsets of `0..m` with pairwise gaps above one;
/// with `cyclic`, the gap between the last and first (through `m`) counts too.
fn spaced_subsets(m: usize, cyclic: bool) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for i in start..m {
            cur.push(i);
            rec(i + 2, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, &mut Vec::new(), &mut out);
    if cyclic {
        out.retain(|b| b.len() < 2 || b[0] + m - b[b.len() - 1] > 1);
    }
    out
}

fn atom_pieces(inv: &Invertible, a: usize, g: &GroupElement) -> Pieces {
    let n = inv.nvars();
    let atom = &inv.atoms()[a];
    let m = atom.len();
    let v = &atom.vars;
    let moving = inv.atom_moving(a, g);
    if moving.is_empty() {
        return vec![(Polynomial::one(n), Vec::new())];
    }
    let lam = |k: usize| g.lambda(v[k]);
    let b = |k: usize, wrap_sign: bool| -> Polynomial {
        let mut e = vec![0u32; n];
        e[v[k]] = atom.exps[k] - 1;
        let den = &Cyclotomic::one() - &lam(k);
        let num = if wrap_sign {
            Cyclotomic::from_int(if (m - 1) % 2 == 0 { 1 } else { -1 })
        } else {
            lam(k).pow(atom.exps[k] as i64)
        };
        Polynomial::term(Monomial(e), &num / &den)
    };
    match atom.kind {
        AtomKind::Fermat => vec![(Polynomial::one(n), vec![v[0]])],
        AtomKind::Loop => spaced_subsets(m, true)
            .into_iter()
            .map(|set| {
                let mut coef = Polynomial::one(n);
                let mut removed = vec![false; m];
                for &k in &set {
                    coef = &coef * &b(k, k == m - 1);
                    removed[k] = true;
                    removed[(k + 1) % m] = true;
                }
                let word = (0..m).filter(|&k| !removed[k]).map(|k| v[k]).collect();
                (coef, word)
            })
            .collect(),
        AtomKind::Chain => {
            let l = moving.len();
            spaced_subsets(l.saturating_sub(1), false)
                .into_iter()
                .map(|set| {
                    let mut coef = Polynomial::one(n);
                    let mut removed = vec![false; l];
                    for &k in &set {
                        coef = &coef * &b(k, false);
                        removed[k] = true;
                        removed[k + 1] = true;
                    }
                    let word = (0..l).filter(|&k| !removed[k]).map(|k| v[k]).collect();
                    (coef, word)
                })
                .collect()
        }
    }
}

/// A `(∂_K + d̃_W)`-closed Koszul cochain representing `1_g`: the top term
/// `e_{I_g} g` corrected by lower-degree terms built from the quantities
/// `b_i^g` of each loop or chain atom. Atoms fixed by `g` contribute `1`.
pub fn kappa_representative(inv: &Invertible, g: &GroupElement) -> Result<KoszulElement> {
    super::require_standard(inv)?;
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    inv.check_symmetry(g)?;
    let n = inv.nvars();
    let mut acc: Pieces = vec![(Polynomial::one(n), Vec::new())];
    for a in 0..inv.atoms().len() {
        let pieces = atom_pieces(inv, a, g);
        let mut next = Pieces::new();
        for (c1, w1) in &acc {
            for (c2, w2) in &pieces {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                next.push((c1 * c2, w));
            }
        }
        acc = next;
    }
    let mut out = KoszulElement::zero(n);
    for (c, w) in acc {
        out.add_term(c, ExteriorWord::sorted(w), g.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial_in;

    #[test]
    fn fermat_generator_is_closed() {
        let inv = Invertible::fermat(3);
        let g = GroupElement::from_fracs(&[(1, 3)]);
        let k = kappa_representative(&inv, &g).unwrap();
        assert_eq!(k, KoszulElement::single(Polynomial::one(1), ExteriorWord::sorted(vec![0]), g.clone()));
        assert!(check_closed(&k, inv.polynomial()).closed);
        let d = koszul_d(&KoszulElement::single(Polynomial::one(1), ExteriorWord::empty(), g.clone()));
        let want = parse_polynomial_in("x1", 1).unwrap().scale(&(&Cyclotomic::one() - &g.lambda(0)));
        assert_eq!(d, KoszulElement::single(want, ExteriorWord::sorted(vec![0]), g));
    }

    #[test]
    fn loop_two_matches_hand_expansion() {
        let inv = Invertible::loop_type(&[2, 2]).unwrap();
        for g in inv.symmetry_group().elements().iter().filter(|g| !g.is_identity()) {
            let k = kappa_representative(&inv, g).unwrap();
            let (l1, l2) = (g.lambda(0), g.lambda(1));
            let one = Cyclotomic::one();
            let b1 = Polynomial::term(Monomial(vec![1, 0]), &l1.pow(2) / &(&one - &l1));
            let b2 = Polynomial::term(Monomial(vec![0, 1]), &Cyclotomic::from_int(-1) / &(&one - &l2));
            let mut want = KoszulElement::single(Polynomial::one(2), ExteriorWord::sorted(vec![0, 1]), g.clone());
            want.add_term(&b1 + &b2, ExteriorWord::empty(), g.clone());
            assert_eq!(k, want);
            assert!(check_closed(&k, inv.polynomial()).closed, "{}", check_closed(&k, inv.polynomial()).residual);
            let bare = KoszulElement::single(Polynomial::one(2), ExteriorWord::sorted(vec![0]), g.clone());
            assert!(!check_closed(&bare, inv.polynomial()).closed);
        }
    }

    #[test]
    fn differentials_square_to_zero() {
        let inv = Invertible::loop_type(&[2, 3, 2]).unwrap();
        let w = inv.polynomial();
        for g in inv.symmetry_group().elements().iter().take(6) {
            let mut c = KoszulElement::zero(3);
            c.add_term(parse_polynomial_in("x1^2*x3 + 2*x2", 3).unwrap(), ExteriorWord::sorted(vec![1]), g.clone());
            c.add_term(parse_polynomial_in("x2*x3 - x1", 3).unwrap(), ExteriorWord::sorted(vec![0, 2]), g.clone());
            c.add_term(parse_polynomial_in("x3^3", 3).unwrap(), ExteriorWord::sorted(vec![0, 1, 2]), g.clone());
            assert!(koszul_d(&koszul_d(&c)).is_zero());
            assert!(koszul_curving(&koszul_curving(&c, w), w).is_zero());
            let anti = koszul_d(&koszul_curving(&c, w)).add(&koszul_curving(&koszul_d(&c), w));
            assert!(anti.is_zero(), "{anti}");
        }
    }

    #[test]
    fn chain_kappa_short() {
        let inv = Invertible::chain(&[2, 2]).unwrap();
        let g = GroupElement::from_fracs(&[(1, 4), (1, 2)]);
        let k = kappa_representative(&inv, &g).unwrap();
        assert_eq!(k.degree_part(0).terms().count(), 1);
        assert!(check_closed(&k, inv.polynomial()).closed);
    }
}
