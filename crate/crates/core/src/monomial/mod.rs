//! Monomial ideals and the invariants read off their Newton polyhedra.

mod newton;

use std::fmt;

pub use newton::{
    integral_closure_monomial, lct_monomial, multiplier_ideal_monomial, newton_membership,
    LctResult, Membership, NewtonPolyhedron,
};

use crate::algebra::monomial::{minimalize, ExponentVector};
use crate::algebra::{Ideal, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::groebner_basis;

/// A nonzero monomial ideal stored by its minimal generators, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if let Some(g) = generators.iter().find(|g| g.len() != nvars) {
            return Err(Error::VariableCountMismatch {
                left: g.len(),
                right: nvars,
            });
        }
        Ok(MonomialIdeal {
            nvars,
            generators: minimalize(generators),
        })
    }

    /// From raw exponent lists.
    pub fn from_exponents(nvars: usize, exponents: &[Vec<u32>]) -> Result<Self> {
        Self::new(
            nvars,
            exponents.iter().cloned().map(ExponentVector::new).collect(),
        )
    }

    /// Accepts any presentation of a monomial ideal; the reduced Gröbner
    /// basis decides whether the ideal is monomial.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let gens: Vec<ExponentVector> = if ideal.is_monomial() {
            ideal
                .generators()
                .iter()
                .map(|g| g.terms()[0].0.clone())
                .collect()
        } else {
            let gb = groebner_basis(ideal)?;
            if !gb.elements().iter().all(Polynomial::is_monomial) {
                return Err(Error::NotMonomial);
            }
            gb.leading_monomials()
        };
        Self::new(ideal.nvars(), gens)
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: vec![ExponentVector::one(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(ExponentVector::is_one)
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// `M_i`: the largest exponent of `x_i` among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        (0..self.nvars)
            .map(|i| self.generators.iter().map(|g| g.get(i)).max().unwrap_or(0))
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(ExponentVector::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut out = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                out.push(a.checked_mul(b)?);
            }
        }
        MonomialIdeal::new(self.nvars, out)
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::from_generators(
            self.nvars,
            self.generators
                .iter()
                .cloned()
                .map(Polynomial::monomial)
                .collect(),
        )
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_ideal().fmt(f)
    }
}

/// The antichain of componentwise-minimal exponent vectors.
pub fn minimal_generators(set: Vec<ExponentVector>) -> Vec<ExponentVector> {
    minimalize(set)
}

/// Exponents clamped to 0/1, then minimalized.
pub fn monomial_radical(ideal: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal {
        nvars: ideal.nvars,
        generators: minimalize(
            ideal
                .generators
                .iter()
                .map(ExponentVector::squarefree_part)
                .collect(),
        ),
    }
}

/// Height of a monomial ideal: the fewest variables meeting the support of
/// every generator.
pub fn codim_monomial(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars;
    if n > 20 {
        return Err(Error::InvalidParameter(format!(
            "codimension search over {n} variables"
        )));
    }
    let supports: Vec<u64> = ideal
        .generators
        .iter()
        .map(ExponentVector::support)
        .collect();
    let best = (0u64..1 << n)
        .filter(|set| supports.iter().all(|s| s & set != 0))
        .map(u64::count_ones)
        .min()
        .expect("the full variable set covers every proper generator");
    Ok(best as usize)
}

#[cfg(test)]
mod tests;
