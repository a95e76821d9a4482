//! Second-order quantum differential operators, the graph summation and the
//! quantum Hessian matrix.

use serde::Serialize;

use crate::cyclo::{quantum_bracket, Cyclotomic};
use crate::error::{Error, Result};
use crate::invertible::{AtomKind, Invertible};
use crate::milnor::{poly_determinant, JacClass, JacobianRing};
use crate::poly::{group_act, quantum_partial, GroupElement, Monomial, Polynomial};

use super::complex::kappa_representative;

/// `∂^{g,h}_{i,j}(f)` with its group label `g^{(i)} h^{(j)}`.
///
/// Mixed type (`i ≠ j`) composes the first-order operators. Pure type uses
/// `x_i^n ↦ (ε₁^{n−1}[n]_{ε₂} − [n]_{ε₁ε₂})/(ε₁ − 1) x_i^{n−2}` with
/// `ε₁ = λ_i(g)`, `ε₂ = λ_i(h)`; `ε₁ = 1` is rejected.
pub fn second_order_apply(
    i: usize,
    j: usize,
    g: &GroupElement,
    h: &GroupElement,
    f: &Polynomial,
) -> Result<(Polynomial, GroupElement)> {
    let label = g.component(i).mul(&h.component(j));
    if i != j {
        return Ok((quantum_partial(g, i, &quantum_partial(h, j, f)), label));
    }
    if g.phase(i).is_zero() {
        return Err(Error::SingularTwist(format!("g = ({g}) acts trivially on x{}", i + 1)));
    }
    let e1 = g.lambda(i);
    let e2 = h.lambda(i);
    let e12 = &e1 * &e2;
    let den = &e1 - &Cyclotomic::one();
    let mut out = Polynomial::zero(f.nvars());
    for (m, c) in f.terms() {
        let n = m.0[i];
        if n < 2 {
            continue;
        }
        let num = &(&e1.pow(n as i64 - 1) * &quantum_bracket(n, &e2)?) - &quantum_bracket(n, &e12)?;
        let coef = &num / &den;
        if coef.is_zero() {
            continue;
        }
        let mut k = m.clone();
        k.0[i] -= 2;
        out.add_term(k, &(c * &coef));
    }
    Ok((out, label))
}

/// All permutations of `0..p` with their signs.
fn permutations(p: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], sign: i32, out: &mut Vec<(Vec<usize>, i32)>) {
        let p = used.len();
        if cur.len() == p {
            out.push((cur.clone(), sign));
            return;
        }
        for v in 0..p {
            if used[v] {
                continue;
            }
            // Inversions contributed by placing v after the current prefix.
            let inv = cur.iter().filter(|&&u| u > v).count();
            used[v] = true;
            cur.push(v);
            rec(cur, used, if inv % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; p], 1, &mut out);
    out
}

fn sign_pow(k: usize) -> Cyclotomic {
    Cyclotomic::from_int(if k % 2 == 0 { 1 } else { -1 })
}

/// The graph summation as a polynomial, before reduction.
fn graph_sum_poly(w: &Polynomial, is: &[usize], js: &[usize], g: &GroupElement) -> Result<Polynomial> {
    let n = w.nvars();
    if is.len() != js.len() {
        return Ok(Polynomial::zero(n));
    }
    let p = is.len();
    let ginv = g.inv();
    let mut total = Polynomial::zero(n);
    for (sigma, sgn) in permutations(p) {
        if (0..p).any(|k| js[sigma[k]] > is[k]) {
            continue;
        }
        let mut prod = Polynomial::one(n);
        for k in 0..p {
            let (i, j) = (is[k], js[sigma[k]]);
            let (f, _) = second_order_apply(i, j, g, &ginv, w)?;
            // The prefix g^{(j..i-1)} moves past the operator value; the
            // factor's total group label is trivial.
            let twisted = group_act(&g.range(j, i), &f)?;
            prod = &prod * &twisted;
            if prod.is_zero() {
                break;
            }
        }
        total = &total + &prod.scale(&Cyclotomic::from_int(sgn as i64));
    }
    Ok(total.scale(&sign_pow(p * p.saturating_sub(1) / 2)))
}

fn full_ring(inv: &Invertible) -> Result<JacobianRing> {
    JacobianRing::full(inv.polynomial(), inv.weights())
}

/// `(−1)^{p(p−1)/2} Σ_{σ∈V} sgn σ Π_k g^{(j_{σ(k)}, i_k−1)} ∂^{g,g^{-1}}_{i_k,j_{σ(k)}}(W) (g^{-1})^{(j_{σ(k)}+1, i_k)}`
/// over `V = {σ : j_{σ(k)} ≤ i_k}`, reduced in `Jac(W)`. Index sets are
/// increasing and 0-based; different sizes give 0.
pub fn graph_sum_cup(inv: &Invertible, is: &[usize], js: &[usize], g: &GroupElement) -> Result<JacClass> {
    let ring = full_ring(inv)?;
    Ok(ring.normal_form(&graph_sum_poly(inv.polynomial(), is, js, g)?))
}

/// `1_g ∪ 1_{g^{-1}}` by the graph summation applied degreewise to the
/// closed representatives of both generators: each pair of terms
/// `a e_I g`, `b e_J g^{-1}` contributes `a · ^g b · (graph sum over I, J)`.
pub fn graph_sum_product(inv: &Invertible, g: &GroupElement) -> Result<JacClass> {
    super::require_single_atom(inv)?;
    let ring = full_ring(inv)?;
    let w = inv.polynomial();
    let kg = kappa_representative(inv, g)?;
    let kh = kappa_representative(inv, &g.inv())?;
    let mut total = Polynomial::zero(inv.nvars());
    for (wi, _, a) in kg.terms() {
        for (wj, _, b) in kh.terms() {
            if wi.len() != wj.len() {
                continue;
            }
            let gs = graph_sum_poly(w, wi.indices(), wj.indices(), g)?;
            total = &total + &(&(a * &group_act(g, b)?) * &gs);
        }
    }
    Ok(ring.normal_form(&total))
}

/// The quantum Hessian matrix `H^g_W` of an atom: size `N` for a loop,
/// `l_g` for a chain, and 1 for a Fermat atom.
#[derive(Clone, Debug, Serialize)]
pub struct QuantumHessianMatrix {
    pub kind: AtomKind,
    /// `l`: the size of the matrix; the determinant carries `(−1)^{l(l−1)/2}`.
    pub size: usize,
    pub entries: Vec<Vec<Polynomial>>,
}

impl QuantumHessianMatrix {
    pub fn determinant(&self, nvars: usize) -> Polynomial {
        poly_determinant(&self.entries, nvars)
    }
}

/// `b_k^g`: `λ_k^{n_k}/(1−λ_k) x_k^{n_k−1}`, except the last loop index which
/// carries `(−1)^{N−1}/(1−λ_N)` instead.
fn b_value(inv: &Invertible, k: usize, g: &GroupElement) -> Polynomial {
    let atom = &inv.atoms()[0];
    let m = atom.len();
    let v = atom.vars[k];
    let lam = g.lambda(v);
    let num = if atom.kind == AtomKind::Loop && k == m - 1 {
        sign_pow(m - 1)
    } else {
        lam.pow(atom.exps[k] as i64)
    };
    let mut e = vec![0u32; inv.nvars()];
    e[v] = atom.exps[k] - 1;
    Polynomial::term(Monomial(e), &num / &(&Cyclotomic::one() - &lam))
}

/// `^g b_k^{g^{-1}}`.
fn b_value_inverse(inv: &Invertible, k: usize, g: &GroupElement) -> Result<Polynomial> {
    group_act(g, &b_value(inv, k, &g.inv()))
}

/// Diagonal entry `([n_k]_{λ_k} − n_k)/(λ_k − 1) x_k^{n_k−2} x_{next}`.
fn diagonal(inv: &Invertible, k: usize, g: &GroupElement) -> Result<Polynomial> {
    let atom = &inv.atoms()[0];
    let m = atom.len();
    let v = atom.vars[k];
    let n = atom.exps[k];
    let lam = g.lambda(v);
    let coef = &(&quantum_bracket(n, &lam)? - &Cyclotomic::from_int(n as i64)) / &(&lam - &Cyclotomic::one());
    let mut e = vec![0u32; inv.nvars()];
    e[v] = n - 2;
    let next = match atom.kind {
        AtomKind::Fermat => None,
        AtomKind::Loop => Some((k + 1) % m),
        AtomKind::Chain => (k + 1 < m).then_some(k + 1),
    };
    if let Some(j) = next {
        e[atom.vars[j]] += 1;
    }
    Ok(Polynomial::term(Monomial(e), coef))
}

/// Builds `H^g_W` with the edge values of the graph expansion: diagonal
/// `⟨i→i⟩`, superdiagonal `b_i^g`, subdiagonal `^g b_i^{g^{-1}}`, and for a
/// loop the corners `h_{1N} = b_N^g`, `h_{N1} = ^g b_N^{g^{-1}}`.
pub fn quantum_hessian_matrix(inv: &Invertible, g: &GroupElement) -> Result<QuantumHessianMatrix> {
    super::require_single_atom(inv)?;
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    let atom = &inv.atoms()[0];
    let m = atom.len();
    let l = match atom.kind {
        AtomKind::Chain => inv.atom_moving(0, g).len(),
        _ => m,
    };
    let n = inv.nvars();
    let mut h = vec![vec![Polynomial::zero(n); l]; l];
    for k in 0..l {
        h[k][k] = diagonal(inv, k, g)?;
    }
    for k in 0..l.saturating_sub(1) {
        h[k][k + 1] = &h[k][k + 1] + &b_value(inv, k, g);
        h[k + 1][k] = &h[k + 1][k] + &b_value_inverse(inv, k, g)?;
    }
    if atom.kind == AtomKind::Loop {
        h[0][m - 1] = &h[0][m - 1] + &b_value(inv, m - 1, g);
        h[m - 1][0] = &h[m - 1][0] + &b_value_inverse(inv, m - 1, g)?;
    }
    Ok(QuantumHessianMatrix { kind: atom.kind, size: l, entries: h })
}

/// `(−1)^{l(l−1)/2} det H^g_W`, reduced in `Jac(W)`.
pub fn det_quantum_hess(inv: &Invertible, g: &GroupElement) -> Result<JacClass> {
    let mat = quantum_hessian_matrix(inv, g)?;
    let ring = full_ring(inv)?;
    let l = mat.size;
    let det = mat.determinant(inv.nvars()).scale(&sign_pow(l * l.saturating_sub(1) / 2));
    Ok(ring.normal_form(&det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::twisted_hessian;

    /// `Σ_{s<n−1} [n−1−s]_{ε₁} (ε₁ε₂)^s`, read off the homotopy directly.
    fn pure_by_sum(n: u32, e1: &Cyclotomic, e2: &Cyclotomic) -> Cyclotomic {
        let e12 = e1 * e2;
        let mut acc = Cyclotomic::zero();
        for s in 0..n.saturating_sub(1) {
            acc = &acc + &(&quantum_bracket(n - 1 - s, e1).unwrap() * &e12.pow(s as i64));
        }
        acc
    }

    #[test]
    fn pure_type_closed_form_matches_sum() {
        for (a, b, m) in [(1, 0, 3), (1, 2, 3), (1, 3, 4), (2, 1, 5), (1, 5, 6)] {
            let g = GroupElement::from_fracs(&[(a, m)]);
            let h = GroupElement::from_fracs(&[(b, m)]);
            for n in 0..7u32 {
                let f = Polynomial::term(Monomial(vec![n]), Cyclotomic::one());
                let (out, _) = second_order_apply(0, 0, &g, &h, &f).unwrap();
                let want = if n < 2 {
                    Polynomial::zero(1)
                } else {
                    Polynomial::term(Monomial(vec![n - 2]), pure_by_sum(n, &g.lambda(0), &h.lambda(0)))
                };
                assert_eq!(out, want, "n = {n}, g = {g}, h = {h}");
            }
        }
    }

    #[test]
    fn pure_type_rejects_trivial_twist() {
        let g = GroupElement::identity(1);
        let f = Polynomial::term(Monomial(vec![3]), Cyclotomic::one());
        assert!(matches!(second_order_apply(0, 0, &g, &g, &f), Err(Error::SingularTwist(_))));
    }

    #[test]
    fn mixed_type_on_product() {
        let g = GroupElement::from_fracs(&[(1, 3), (2, 3)]);
        let f = Polynomial::term(Monomial(vec![1, 1]), Cyclotomic::one());
        let (out, label) = second_order_apply(0, 1, &g, &g.inv(), &f).unwrap();
        assert_eq!(out, Polynomial::one(2));
        assert_eq!(label, GroupElement::from_fracs(&[(1, 3), (1, 3)]));
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|p| p.1).sum::<i32>(), 0);
        assert!(perms.contains(&(vec![1, 0, 2], -1)));
        assert!(perms.contains(&(vec![1, 2, 0], 1)));
    }

    #[test]
    fn fermat_graph_sum() {
        for n in 2..=6u32 {
            let inv = Invertible::fermat(n);
            for g in inv.symmetry_group().elements().iter().filter(|g| !g.is_identity()) {
                let ring = full_ring(&inv).unwrap();
                let gs = graph_sum_cup(&inv, &[0], &[0], g).unwrap();
                let want = Polynomial::term(
                    Monomial(vec![n - 2]),
                    &Cyclotomic::from_int(n as i64) / &(&Cyclotomic::one() - &g.lambda(0)),
                );
                assert_eq!(gs, ring.normal_form(&want));
                assert_eq!(graph_sum_cup(&inv, &[], &[], g).unwrap(), ring.normal_form(&Polynomial::one(1)));
                assert!(graph_sum_cup(&inv, &[0], &[], g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn loop_two_by_two() {
        let inv = Invertible::loop_type(&[2, 2]).unwrap();
        let ring = full_ring(&inv).unwrap();
        for g in inv.symmetry_group().elements().iter().filter(|g| !g.is_identity()) {
            let one = Cyclotomic::one();
            let den = &(&g.lambda(0) - &one) * &(&g.lambda(1) - &one);
            let want = ring.normal_form(&Polynomial::term(Monomial(vec![1, 1]), &Cyclotomic::from_int(-3) / &den));
            assert_eq!(det_quantum_hess(&inv, g).unwrap(), want);
            assert_eq!(graph_sum_product(&inv, g).unwrap(), want);
            let hess = ring.normal_form(&twisted_hessian(&inv, g).unwrap());
            assert_eq!(hess.scale(&Cyclotomic::from_int(-1)), want);
        }
    }

    #[test]
    fn chain_single_moving_variable() {
        let inv = Invertible::chain(&[2, 2]).unwrap();
        let g = GroupElement::from_fracs(&[(1, 2), (0, 1)]);
        let mat = quantum_hessian_matrix(&inv, &g).unwrap();
        assert_eq!(mat.size, 1);
        let want = Polynomial::term(Monomial(vec![0, 1]), &Cyclotomic::from_int(-2) / &(&g.lambda(0) - &Cyclotomic::one()));
        assert_eq!(mat.entries[0][0], want);
    }
}
