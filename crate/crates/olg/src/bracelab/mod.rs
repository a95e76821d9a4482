//! A laboratory for twisted brace operations on Hochschild cochains of
//! finite-dimensional algebras with a group action, with exact checks of the
//! identities they satisfy and of the comparison map `Ψ` to the crossed product.

mod algebra;
mod cochain;
mod cohomology;
mod ops;
mod scalar;
mod suite;

pub use algebra::{AlgebraFixture, FiniteAlgebra, FiniteGroup, FixtureScalar, Matrix};
pub use cochain::{Cochain, Tensor};
pub use cohomology::{compare_cohomology, DegreeComparison};
pub use ops::{brace_terms, BraceTerm, Lab};
pub use scalar::Z12;
pub use suite::{identity_names, pre_jacobi_rhs, run_suite, IdentityResult, Input, SuiteConfig, SuiteReport, DEFAULT_SEED};
