//! Quasisymmetric and Schur expansions with q-polynomial coefficients.

pub mod json;
pub mod lr;
pub mod monomial;
pub mod qpoly;
pub mod qsym;

pub use json::{qsym_from_json, qsym_to_json, schur_to_json};
pub use lr::lr_coefficients;
pub use monomial::{evaluate_monomials, schur_eval, skew_schur_eval, MPoly};
pub use qpoly::{Coeff, QPoly};
pub use qsym::{certify_schur_positive, extract_schur, schur_in_q, QSymExpansion, SchurExpansion};
