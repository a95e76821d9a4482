//! Side-by-side comparison of the four routes to `1_g ∪ 1_{g^{-1}}`.

use serde::Serialize;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::invertible::Invertible;
use crate::milnor::{JacClass, JacobianRing};
use crate::orbifold::twisted_hessian;
use crate::poly::GroupElement;

use super::{det_quantum_hess, graph_sum_product, kappa_representative, quantum_hessian_matrix, retract_cup_oracle};

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckRow {
    pub g: String,
    /// Size of the quantum Hessian matrix (`l_g` for chains).
    pub size: usize,
    pub graph_sum: String,
    pub det_quantum_hess: String,
    /// `(−1)^{l(l−1)/2} Hess^g`.
    pub signed_hessian: String,
    pub retract: String,
    pub agree: bool,
}

fn render(ring: &JacobianRing, c: &JacClass) -> String {
    ring.lift(c).to_string()
}

fn row(inv: &Invertible, ring: &JacobianRing, g: &GroupElement) -> Result<CrossCheckRow> {
    let size = quantum_hessian_matrix(inv, g)?.size;
    let graph = graph_sum_product(inv, g)?;
    let det = det_quantum_hess(inv, g)?;
    let sign = Cyclotomic::from_int(if (size * size.saturating_sub(1) / 2) % 2 == 0 { 1 } else { -1 });
    let hess = ring.normal_form(&twisted_hessian(inv, g)?.scale(&sign));
    let a = kappa_representative(inv, g)?;
    let b = kappa_representative(inv, &g.inv())?;
    let retract = retract_cup_oracle(inv, &a, &b)?;
    let agree = graph == det && det == hess && hess == retract;
    Ok(CrossCheckRow {
        g: g.text(),
        size,
        graph_sum: render(ring, &graph),
        det_quantum_hess: render(ring, &det),
        signed_hessian: render(ring, &hess),
        retract: render(ring, &retract),
        agree,
    })
}

/// One row per non-identity symmetry of a single-atom `W`.
pub fn cross_check(inv: &Invertible) -> Result<Vec<CrossCheckRow>> {
    super::require_single_atom(inv)?;
    let ring = JacobianRing::full(inv.polynomial(), inv.weights())?;
    let elems: Vec<GroupElement> =
        inv.symmetry_group().elements().iter().filter(|g| !g.is_identity()).cloned().collect();
    if elems.is_empty() {
        return Err(Error::InvalidArgument("the symmetry group is trivial".into()));
    }
    crate::par::try_map(elems, |g| row(inv, &ring, &g))
}

pub fn cross_check_json(inv: &Invertible) -> Result<serde_json::Value> {
    let rows = cross_check(inv)?;
    Ok(serde_json::json!({
        "polynomial": inv.polynomial().to_string(),
        "all_agree": rows.iter().all(|r| r.agree),
        "rows": rows,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_agree() {
        for inv in [Invertible::fermat(4), Invertible::loop_type(&[2, 2]).unwrap(), Invertible::chain(&[2, 2]).unwrap()] {
            for r in cross_check(&inv).unwrap() {
                assert!(r.agree, "{}: {r:?}", inv.polynomial());
            }
        }
    }
}
