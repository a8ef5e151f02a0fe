use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::monomial::{minimalize, ExponentVector};
use crate::algebra::Ideal;
use crate::error::{Error, Result};
use crate::groebner::groebner_basis;

/// `HS(S/I) = numerator(t) / (1 - t)^nvars`, numerator as coefficients of
/// `t^0, t^1, ...` with trailing zeros removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub numerator: Vec<i64>,
}

impl HilbertSeries {
    /// `dim_k (S/I)_d`.
    pub fn value(&self, d: u32) -> i64 {
        // coefficient of t^d in numerator * Σ C(k + n - 1, n - 1) t^k
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(e, _)| e as u32 <= d)
            .map(|(e, &c)| c * binomial(d as i64 - e as i64 + n - 1, n - 1))
            .sum()
    }
}

fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1i64, |acc, k| acc * (a - k) / (k + 1))
}

pub(crate) fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] -= c;
    }
}

/// Numerator for `S/M`, `M` a monomial ideal given by an antichain.
fn numerator(gens: Vec<ExponentVector>, nvars: usize) -> Vec<i64> {
    if gens.iter().any(ExponentVector::is_one) {
        return Vec::new();
    }
    // pivot on a variable of a generator that is not a pure power
    let pivot = gens
        .iter()
        .find(|g| g.support().count_ones() > 1)
        .and_then(|g| (0..nvars).find(|&v| g.get(v) > 0));
    match pivot {
        None => {
            // pure powers in distinct variables: Π (1 - t^d)
            let mut out = vec![1i64];
            for g in &gens {
                let shifted = out.clone();
                poly_sub_shifted(&mut out, &shifted, g.degree() as usize);
            }
            trim(out)
        }
        Some(v) => {
            // N(M) = N(M + x_v) + t * N(M : x_v)
            let x = ExponentVector::variable(nvars, v);
            let mut plus: Vec<ExponentVector> =
                gens.iter().filter(|g| g.get(v) == 0).cloned().collect();
            plus.push(x.clone());
            let colon = minimalize(gens.iter().map(|g| g.saturating_div(&x)).collect());
            let mut out = numerator(minimalize(plus), nvars);
            let tail = numerator(colon, nvars);
            let neg: Vec<i64> = tail.iter().map(|c| -c).collect();
            poly_sub_shifted(&mut out, &neg, 1);
            trim(out)
        }
    }
}

/// Hilbert series of `S/I` from the grevlex lead-term ideal.
pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.nvars();
    let leads = groebner_basis(ideal)?.leading_monomials();
    Ok(HilbertSeries {
        nvars: n,
        numerator: numerator(minimalize(leads), n),
    })
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[i64]) -> fmt::Result {
    let mut first = true;
    for (e, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
        }
        first = false;
        match (e, mag) {
            (0, m) => write!(f, "{m}")?,
            (1, 1) => write!(f, "t")?,
            (1, m) => write!(f, "{m}*t")?,
            (e, 1) => write!(f, "t^{e}")?,
            (e, m) => write!(f, "{m}*t^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_empty() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        write_poly(f, &self.numerator)?;
        match self.nvars {
            0 => write!(f, ")"),
            1 => write!(f, ")/(1 - t)"),
            n => write!(f, ")/(1 - t)^{n}"),
        }
    }
}
