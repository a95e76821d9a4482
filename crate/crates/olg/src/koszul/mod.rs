//! Koszul-side cross-check of the orbifold cup product `1_g ∪ 1_{g^{-1}}`.
//!
//! Four independent routes are provided: the graph summation over
//! permutations, the quantum Hessian determinant, the closed twisted Hessian
//! formula (from [`crate::orbifold`]), and a brute-force evaluation of the
//! perturbed retraction on reduced bar cochains.

mod complex;
mod operators;
mod report;
mod retract;

pub use complex::{check_closed, kappa_representative, koszul_curving, koszul_d, ClosedCheck};
pub use operators::{
    det_quantum_hess, graph_sum_cup, graph_sum_product, quantum_hessian_matrix, second_order_apply,
    QuantumHessianMatrix,
};
pub use report::{cross_check, cross_check_json, CrossCheckRow};
pub use retract::{
    homotopy_vanishes, phi_star, retract_cup_oracle, upsilon_star, Evaluator, NodeId, Value, WordAtom, WordCochain,
    WordTerm,
};

use crate::error::{Error, Result};
use crate::invertible::Invertible;

/// The oracles index variables by the atom's own order; this requires every
/// atom to sit on consecutive variables.
fn require_standard(inv: &Invertible) -> Result<()> {
    if inv.is_standard_order() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{} is not in standard variable order; relabel it with canonical() first",
            inv.polynomial()
        )))
    }
}

fn require_single_atom(inv: &Invertible) -> Result<()> {
    require_standard(inv)?;
    if inv.atoms().len() == 1 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{} is not a single atom", inv.polynomial())))
    }
}
