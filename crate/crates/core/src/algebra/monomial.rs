//! Exponent vectors: monomials without coefficients.

use std::fmt;

use crate::error::{Error, Result};

/// Exponents of a monomial `x0^e0 * ... * xn^en`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        ExponentVector(e)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Support as a bitmask over variable indices.
    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    /// `self | other`, i.e. componentwise `self <= other`.
    #[inline]
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &ExponentVector) -> Result<ExponentVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(ExponentVector(out))
    }

    /// Product; panics on overflow, which the degrees in scope never reach.
    #[inline]
    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn pow(&self, k: u32) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .map(|e| e.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if !other.divides(self) {
            return None;
        }
        Some(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Componentwise `max(self - other, 0)`: the generator of `(x^self) : x^other`.
    pub fn saturating_div(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Insert a new variable with exponent `e` at position `index`.
    pub fn insert_var(&self, index: usize, e: u32) -> ExponentVector {
        let mut v = self.0.clone();
        v.insert(index, e);
        ExponentVector(v)
    }

    pub fn remove_var(&self, index: usize) -> ExponentVector {
        let mut v = self.0.clone();
        v.remove(index);
        ExponentVector(v)
    }

    /// Exponents clamped to 0/1.
    pub fn squarefree_part(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&e| e.min(1)).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    /// Renders as `x0^2*x3`, or `1` for the constant monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All exponent vectors of total degree `d` in `nvars` variables, in lex-descending order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i + 1 == nvars {
            cur[i] = left;
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    let mut cur = vec![0; nvars];
    rec(nvars, 0, d, &mut cur, &mut out);
    out
}

/// Keep only the componentwise-minimal elements; result sorted and deduplicated.
pub fn minimalize(mut set: Vec<ExponentVector>) -> Vec<ExponentVector> {
    set.sort_by_key(|e| (e.degree(), e.clone()));
    set.dedup();
    let mut out: Vec<ExponentVector> = Vec::with_capacity(set.len());
    for e in set {
        if !out.iter().any(|m| m.divides(&e)) {
            out.push(e);
        }
    }
    out.sort();
    out
}
