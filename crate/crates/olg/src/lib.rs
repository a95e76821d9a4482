//! Exact computations for orbifold Landau-Ginzburg B-models of invertible
//! polynomials: Jacobian rings, twisted sectors, the orbifold cup product,
//! a Koszul-side cross-check of that product, and a brace-operation lab for
//! Hochschild cochains of crossed products.

pub mod bracelab;
pub mod cyclo;
pub mod error;
pub mod invertible;
pub mod koszul;
pub mod linalg;
pub mod milnor;
pub mod orbifold;
pub mod par;
pub mod poly;

pub use cyclo::{Cyclotomic, Phase, Rational};
pub use error::{Error, Result};
pub use poly::{ExteriorWord, GroupElement, KoszulElement, Monomial, Polynomial};
