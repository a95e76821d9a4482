//! Low-degree Hochschild cohomology of `C(A, A[G])^G` and of `C(A[G], A[G])`.

use serde::Serialize;

use crate::cyclo::Cyclotomic;
use crate::error::Result;
use crate::linalg::{sparse_rank, SparseVec};

use super::cochain::{Cochain, Tensor};
use super::ops::Lab;
use super::scalar::Z12;

#[derive(Clone, Debug, Serialize)]
pub struct DegreeComparison {
    pub degree: usize,
    /// `dim H^p(C(A, A[G])^G, ∂_H)`.
    pub invariant: usize,
    /// `dim HH^p(A[G])`.
    pub crossed: usize,
}

impl DegreeComparison {
    pub fn agree(&self) -> bool {
        self.invariant == self.crossed
    }
}

fn flatten(c: &Cochain, arity: usize, sectors: usize) -> SparseVec<Cyclotomic> {
    let mut v = SparseVec::new();
    for (p, g, t) in c.parts() {
        debug_assert_eq!(p, arity);
        for (k, x) in t.data.iter().enumerate() {
            if !x.is_zero() {
                v.insert(k * sectors + g, x.to_cyclotomic());
            }
        }
    }
    v
}

fn basis(dim: usize, arity: usize, sectors: usize) -> impl Iterator<Item = Cochain> {
    let size = dim.pow(arity as u32 + 1);
    (0..size * sectors).map(move |k| {
        let mut t = Tensor::zero(dim, arity);
        t.data[k / sectors] = Z12::ONE;
        Cochain::single(k % sectors, t)
    })
}

/// `(dim V_p, rank ∂_H|V_p)` where `V_p` is the span of `proj(basis)`.
fn dims(lab: &Lab, arity: usize, sectors: usize, proj: &dyn Fn(&Cochain) -> Cochain) -> (usize, usize) {
    let projected: Vec<Cochain> = basis(lab.dim(), arity, sectors).map(|b| proj(&b)).collect();
    let span: Vec<SparseVec<Cyclotomic>> = projected.iter().map(|c| flatten(c, arity, sectors)).collect();
    let images: Vec<SparseVec<Cyclotomic>> =
        crate::par::map(projected, |c| flatten(&lab.hochschild_d(&c), arity + 1, sectors));
    (sparse_rank(&span), sparse_rank(&images))
}

fn cohomology(lab: &Lab, sectors: usize, max_degree: usize, proj: &dyn Fn(&Cochain) -> Cochain) -> Vec<usize> {
    let data: Vec<(usize, usize)> = (0..=max_degree).map(|p| dims(lab, p, sectors, proj)).collect();
    (0..=max_degree)
        .map(|p| {
            let (space, rank_out) = data[p];
            let rank_in = if p == 0 { 0 } else { data[p - 1].1 };
            space - rank_out - rank_in
        })
        .collect()
}

/// Dimensions of `H^p` of the invariant twisted cochains and of `HH^p(A[G])`
/// for `p = 0..=max_degree`, uncurved.
pub fn compare_cohomology(lab: &Lab, max_degree: usize) -> Result<Vec<DegreeComparison>> {
    let big = lab.crossed_lab()?;
    let inv = cohomology(lab, lab.group_order(), max_degree, &|c| lab.reynolds(c));
    let crossed = cohomology(&big, 1, max_degree, &|c| c.clone());
    Ok((0..=max_degree).map(|p| DegreeComparison { degree: p, invariant: inv[p], crossed: crossed[p] }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracelab::FiniteAlgebra;

    #[test]
    fn dual_numbers_with_sign_action() {
        // Q[x]/(x²) with x ↦ −x: HH^0(A[G]) is the center of A[G].
        let lab = Lab::new(FiniteAlgebra::truncated_polynomial(2, 2, None).unwrap());
        let rows = compare_cohomology(&lab, 1).unwrap();
        for r in &rows {
            assert!(r.agree(), "{r:?}");
        }
    }

    #[test]
    fn trivial_group_is_plain_hochschild() {
        // Dual numbers in characteristic 0: HH^0 = A, HH^1 = span{x d/dx}, HH^2 is one-dimensional.
        let lab = Lab::new(FiniteAlgebra::truncated_polynomial(2, 1, None).unwrap());
        let rows = compare_cohomology(&lab, 2).unwrap();
        assert_eq!(rows.iter().map(|r| r.invariant).collect::<Vec<_>>(), vec![2, 1, 1]);
        for r in &rows {
            assert!(r.agree(), "{r:?}");
        }
    }
}
