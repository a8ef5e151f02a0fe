//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::ExponentVector;
use super::order::TermOrder;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A polynomial in `nvars` variables with exact rational coefficients.
///
/// Terms are kept in grevlex-descending order with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(ExponentVector, Rational)>,
}

const CANONICAL: TermOrder = TermOrder::grevlex();

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(c, ExponentVector::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        Self::monomial(ExponentVector::variable(nvars, index))
    }

    pub fn monomial(m: ExponentVector) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: ExponentVector) -> Self {
        let nvars = m.len();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Builds a canonical polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (ExponentVector, Rational)>,
    ) -> Self {
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), nvars);
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| CANONICAL.compare(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in grevlex-descending order.
    pub fn terms(&self) -> &[(ExponentVector, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(ExponentVector, Rational)> {
        self.terms
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(ExponentVector, Rational)> {
        let mut t = self.terms.clone();
        if *order != CANONICAL {
            t.sort_by(|a, b| order.compare(&b.0, &a.0));
        }
        t
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&ExponentVector, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Common total degree of all terms, if homogeneous.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let first = self.terms.first().ok_or(Error::ZeroPolynomial)?.0.degree();
        Ok(self
            .terms
            .iter()
            .all(|(m, _)| m.degree() == first)
            .then_some(first))
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.homogeneous_degree(), Ok(Some(_)))
    }

    fn check_shape(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_shape(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_shape(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_shape(other)?;
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                prods.push((m1.checked_mul(m2)?, c1 * c2));
            }
        }
        Ok(Polynomial::from_terms(self.nvars, prods))
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sgn = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match CANONICAL.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// Multiplication by a monomial preserves the grevlex order of terms.
    pub fn mul_monomial(&self, m: &ExponentVector) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Scales so that the `order`-leading coefficient is one.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Reinterprets in a ring with one more variable inserted at `index`.
    pub fn insert_var(&self, index: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars + 1,
            self.terms
                .iter()
                .map(|(m, c)| (m.insert_var(index, 0), c.clone())),
        )
    }

    /// Drops variable `index`; `None` if it occurs.
    pub fn remove_var(&self, index: usize) -> Option<Polynomial> {
        if self.terms.iter().any(|(m, _)| m.get(index) > 0) {
            return None;
        }
        Some(Polynomial::from_terms(
            self.nvars - 1,
            self.terms
                .iter()
                .map(|(m, c)| (m.remove_var(index), c.clone())),
        ))
    }

    pub fn uses_var(&self, index: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.get(index) > 0)
    }

    /// Exact quotient `self / divisor`, failing if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_shape(divisor)?;
        let (lm, lc) = match divisor.terms.first() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::ZeroPolynomial),
        };
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = m.checked_div(&lm).ok_or(Error::InexactDivision)?;
            let qc = c / &lc;
            rem = rem.try_sub(&divisor.mul_monomial(&q).scale(&qc))?;
            quot.push((q, qc));
        }
        Ok(Polynomial::from_terms(self.nvars, quot))
    }

    /// Renders terms in descending `order`.
    pub fn display_with(&self, order: &TermOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(order).iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one();
            if m.is_one() {
                s.push_str(&super::rational::to_short(&a));
            } else {
                if !unit {
                    s.push_str(&super::rational::to_short(&a));
                    s.push('*');
                }
                s.push_str(&m.to_string());
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&CANONICAL))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_op(kind: PolyOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    match kind {
        PolyOp::Add => f.try_add(g),
        PolyOp::Sub => f.try_sub(g),
        PolyOp::Mul => f.try_mul(g),
    }
}
