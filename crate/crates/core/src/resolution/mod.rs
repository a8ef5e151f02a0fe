//! Minimal graded free resolutions, Betti tables, regularity, Hilbert
//! series, and a Koszul-homology cross-check for Betti numbers.

mod betti;
mod hilbert;
mod koszul;
mod linalg;
mod regularity;
mod schreyer;

pub use betti::{BettiEntry, BettiTable};
pub use hilbert::{hilbert_series, HilbertSeries};
pub use koszul::{betti_via_koszul, minimum_koszul_cutoff};
pub use regularity::{regularity, RegularityMode, RegularityReport};
pub use schreyer::{betti_table, free_resolution, GradedFreeResolution, PolyMatrix};

#[cfg(test)]
mod tests;
