//! Exact verification toolkit for quasi-filiform Lie algebras of maximum
//! length: structure constants, ½-derivation spaces and transposed Poisson
//! product tables, all over arbitrary-precision rationals.

pub mod catalog;
pub mod derivations;
pub mod error;
pub mod expr;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod tpa;
pub mod witness;

pub use catalog::{list_families, make_algebra, FamilyId, FamilyInfo, FamilyTag};
pub use derivations::{
    assemble_constraints, is_delta_derivation, is_half_derivation, predicted_space,
    solve_derivation_space, verify_theorem, DerivationProblem, DerivationSpace, LinearMap,
    TheoremReport,
};
pub use error::{Error, Result};
pub use lie::LieAlgebra;
pub use linalg::{equal_span, nullspace, rref, Matrix, Rational, Subspace};
pub use report::{cmd_verify_all, verify_variant, RunReport, VariantReport};
pub use tpa::{
    check_associative, check_poisson_leibniz, check_transposed_leibniz, instantiate, list_variants,
    multiplication_operator, sample_parameters, CommutativeProduct, ParameterAssignment, TPVariant,
};
pub use witness::{CheckReport, Violation};
