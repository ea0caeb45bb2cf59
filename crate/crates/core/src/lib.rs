//! Dual equivalence graphs, quasisymmetric expansions and LLT polynomials.

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod involutions;
pub mod llt;
pub mod shapes;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use graph::SignedColoredGraph;
pub use shapes::{Cell, Partition, SkewShape, TupleShape};
pub use tableaux::{Signature, StandardFilling};

use num_bigint::BigInt;

/// Exact coefficients used by the command line and reports.
pub type Integer = BigInt;
pub type QPoly = symfunc::QPoly<BigInt>;
pub type QSymExpansion = symfunc::QSymExpansion<BigInt>;
pub type SchurExpansion = symfunc::SchurExpansion<BigInt>;
