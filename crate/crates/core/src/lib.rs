//! Exact computer algebra for Leibniz algebras and Lie algebras in the
//! category of linear maps (2-vector spaces).
//!
//! The crate covers structure-constant presentations and their axiom checks,
//! the Lie quotient of a Leibniz algebra, the monoidal structure of the
//! category of linear maps, a PBW engine for universal enveloping algebras,
//! the enveloping bimodule `U(g) ⊗ M` with its dialgebra operations, and
//! degree-truncated formal integration to formal group laws.
//!
//! All arithmetic is exact over the rationals.

pub mod algebra;
pub mod catalog;
pub mod envelope;
pub mod error;
pub mod formal_group;
pub mod io;
pub mod linear;
pub mod lm;
pub mod pbw;
pub mod right_module;
pub mod scalar;
pub mod series;
pub mod show;

pub use algebra::{
    check_leibniz, check_lie, liezation, Algebra, AxiomReport, Liezation, Violation,
};
pub use envelope::{BimoduleElement, LmEnvelope, Trivialization};
pub use error::{Error, Result};
pub use formal_group::{
    cbh_dynkin, extend_coalgebra_morphism, integrate_lie, integrate_lm, verify_formal_group,
    verify_lm_integration, Claim, ClaimStatus, LmFormalGroup,
};
pub use linear::{LinComb, LinearMap, Vector};
pub use lm::{check_lm_jacobi, leibniz_from_lm, lm_from_leibniz, LmLieAlgebra};
pub use pbw::{Monomial, UeaElement, UniversalEnvelope};
pub use right_module::RightModule;
pub use scalar::Q;
pub use series::{compose_series, G1Series, G2Series, Inner, SeriesMap};
