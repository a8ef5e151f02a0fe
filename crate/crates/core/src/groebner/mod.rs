//! Buchberger engine and the ideal toolkit built on it.

mod basis;
mod ops;

pub use basis::{buchberger, groebner_basis, GroebnerBasis};
#[cfg(test)]
use basis::{reduce, to_terms, Terms};
pub use ops::{
    eliminate, ideal_equal, ideal_membership, intersect, is_subset, is_unit, normal_form, power,
    quotient, radical_membership, reduced_generators, saturate, saturate_irrelevant,
    SATURATION_CAP,
};

#[cfg(test)]
mod tests;
