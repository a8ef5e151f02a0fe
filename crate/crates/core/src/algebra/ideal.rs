use std::fmt;
use std::sync::{Arc, Mutex};

use super::order::TermOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;

type BasisCache = Arc<Mutex<Vec<(TermOrder, Arc<GroebnerBasis>)>>>;

/// A finitely generated ideal of `Q[x0, ..., x(n-1)]`.
///
/// An empty generator list is the zero ideal. Reduced Gröbner bases are
/// cached per term order and shared between clones.
#[derive(Clone)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    cache: BasisCache,
}

impl Ideal {
    /// Rejects zero generators and mismatched rings.
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.nvars() != nvars {
                return Err(Error::VariableCountMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator { index: i });
            }
        }
        Ok(Self::build(nvars, generators))
    }

    /// Like [`Ideal::new`] but silently drops zero generators.
    pub fn from_generators(nvars: usize, generators: Vec<Polynomial>) -> Self {
        let gens = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Self::build(nvars, gens)
    }

    fn build(nvars: usize, generators: Vec<Polynomial>) -> Self {
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        Ideal {
            nvars,
            generators,
            homogeneous,
            cache: Arc::new(Mutex::new(Vec::new())),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Self::build(nvars, vec![Polynomial::one(nvars)])
    }

    pub fn zero(nvars: usize) -> Self {
        Self::build(nvars, Vec::new())
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_monomial())
    }

    pub(crate) fn cached_basis(&self, order: &TermOrder) -> Option<Arc<GroebnerBasis>> {
        let cache = self.cache.lock().expect("basis cache poisoned");
        cache
            .iter()
            .find(|(o, _)| o == order)
            .map(|(_, b)| b.clone())
    }

    pub(crate) fn store_basis(&self, order: &TermOrder, basis: Arc<GroebnerBasis>) {
        let mut cache = self.cache.lock().expect("basis cache poisoned");
        if !cache.iter().any(|(o, _)| o == order) {
            cache.push((order.clone(), basis));
        }
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_same_ring(self, other)?;
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ok(Ideal::from_generators(self.nvars, g))
    }

    /// Product of ideals, generated by pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_same_ring(self, other)?;
        let mut g = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                g.push(a.try_mul(b)?);
            }
        }
        Ok(Ideal::from_generators(self.nvars, dedup(g)))
    }

    pub fn with_generator(&self, f: &Polynomial) -> Result<Ideal> {
        self.sum(&Ideal::from_generators(self.nvars, vec![f.clone()]))
    }

    /// Generator list rendered in the input grammar.
    pub fn to_input_string(&self) -> String {
        format!("{self}")
    }
}

pub(crate) fn check_same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.nvars != b.nvars {
        return Err(Error::VariableCountMismatch {
            left: a.nvars,
            right: b.nvars,
        });
    }
    Ok(())
}

/// Removes duplicate generators up to a scalar factor.
pub(crate) fn dedup(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = TermOrder::grevlex();
    let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
    let mut seen = std::collections::HashSet::new();
    for g in gens {
        let m = g.monic(&order);
        if seen.insert(m) {
            out.push(g);
        }
    }
    out
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nvars == 1 {
            write!(f, "vars x0; ")?;
        } else {
            write!(f, "vars x0..x{}; ", self.nvars.saturating_sub(1))?;
        }
        if self.generators.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}
