//! Littlewood-Richardson coefficients from the dual equivalence classes of a
//! disconnected skew shape.

use crate::error::Result;
use crate::involutions::{schur_expansion_from_de, standard_family};
use crate::shapes::{Partition, SkewShape, TupleShape};

use super::qpoly::Coeff;
use super::qsym::SchurExpansion;

/// `nu` in the bottom rows shifted right past `mu`, `mu` stacked above it.
/// `gap` extra empty columns separate the two pieces.
pub fn disjoint_union(mu: &Partition, nu: &Partition, gap: usize) -> SkewShape {
    let shift = mu.part(1) + gap;
    let mut outer: Vec<usize> = nu.parts().iter().map(|&p| p + shift).collect();
    outer.extend_from_slice(mu.parts());
    let inner = vec![shift; nu.len()];
    SkewShape::new(
        Partition::from_padded(outer).expect("stacked rows decrease"),
        Partition::from_padded(inner).expect("constant rows"),
    )
    .expect("inner fits inside outer")
}

/// `s_mu * s_nu` expanded in Schur functions.
pub fn lr_coefficients<C: Coeff>(mu: &Partition, nu: &Partition) -> Result<SchurExpansion<C>> {
    lr_coefficients_with_gap(mu, nu, 0)
}

pub fn lr_coefficients_with_gap<C: Coeff>(mu: &Partition, nu: &Partition, gap: usize) -> Result<SchurExpansion<C>> {
    let shape = TupleShape::single(disjoint_union(mu, nu, gap));
    let fam = standard_family(&shape, usize::MAX)?;
    schur_expansion_from_de(&fam)
}
