//! Castelnuovo–Mumford regularity, log-canonical thresholds, multiplier
//! ideals and integral closures of polynomial ideals over the rationals.
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: exact rationals, monomials, term orders, polynomials, ideals
//!   and the text grammar for ideals.
//! - [`groebner`]: Buchberger's algorithm plus membership, elimination,
//!   colon ideals, saturation, intersection and radical membership.
//! - [`resolution`]: Schreyer resolutions, Betti tables, regularity, Hilbert
//!   series and a Koszul-homology Betti oracle.
//! - [`lp`]: exact rational simplex with optimality certificates.
//! - [`monomial`]: Newton polyhedra of monomial ideals, log-canonical
//!   thresholds, multiplier ideals, integral closures, radicals, codimension.
//! - [`integrality`]: integral dependence via the determinantal trick.
//! - [`harness`]: seeded corpora and the inequality/conjecture checks.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod harness;
pub mod integrality;
pub mod lp;
pub mod monomial;
pub mod parallel;
pub mod resolution;

pub use error::{Error, Result};
