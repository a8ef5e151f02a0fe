//! Integral dependence through the criterion
//! `f ∈ Ī  ⟺  I·(I + (f))^k = (I + (f))^{k+1}` for some `k`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Ideal, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, ideal_membership, is_subset, reduced_generators};
use crate::monomial::{integral_closure_monomial, MonomialIdeal};
use crate::parallel::{map, Parallelism};

pub const DEFAULT_MAX_K: u32 = 8;

/// A semi-decision: `Integral` carries the least witness `k`; running out
/// of iterations says nothing about non-integrality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum IntegralityVerdict {
    Integral { k: u32 },
    NotShown { bound: u32 },
}

impl IntegralityVerdict {
    pub fn is_integral(&self) -> bool {
        matches!(self, IntegralityVerdict::Integral { .. })
    }

    /// Re-checks `I·(I+(f))^k = (I+(f))^{k+1}` from scratch.
    pub fn reverify(&self, f: &Polynomial, ideal: &Ideal) -> Result<bool> {
        let IntegralityVerdict::Integral { k } = *self else {
            return Ok(true);
        };
        let extended = ideal.with_generator(f)?;
        let mut power = Ideal::unit(ideal.nvars());
        for _ in 0..k {
            power = power.product(&extended)?;
        }
        ideal_equal(&ideal.product(&power)?, &power.product(&extended)?)
    }
}

fn check_inputs(f: &Polynomial, ideal: &Ideal) -> Result<()> {
    if f.nvars() != ideal.nvars() {
        return Err(Error::VariableCountMismatch {
            left: f.nvars(),
            right: ideal.nvars(),
        });
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_homogeneous() || !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(())
}

/// Least `k <= max_k` with `f^{k+1} ∈ I·(I+(f))^k`, which is equivalent to
/// the ideal equality since every other product term already lies in
/// `I·(I+(f))^k`.
pub fn is_integral_over(f: &Polynomial, ideal: &Ideal, max_k: u32) -> Result<IntegralityVerdict> {
    check_inputs(f, ideal)?;
    if f.is_zero() || ideal_membership(f, ideal)? {
        return Ok(IntegralityVerdict::Integral { k: 0 });
    }
    let extended = reduced_generators(&ideal.with_generator(f)?)?;
    let mut power = extended.clone();
    let mut f_power = f.clone();
    for k in 1..=max_k {
        f_power = f_power.try_mul(f)?;
        let lhs = ideal.product(&power)?;
        if ideal_membership(&f_power, &lhs)? {
            return Ok(IntegralityVerdict::Integral { k });
        }
        if k < max_k {
            power = reduced_generators(&power.product(&extended)?)?;
        }
    }
    Ok(IntegralityVerdict::NotShown { bound: max_k })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtensionVerdict {
    Yes,
    No,
    Unknown,
}

/// Whether `I ⊆ J` is an integral extension, i.e. `J ⊆ Ī`. A negative
/// answer needs proof: containment failure, or a monomial closure
/// comparison when both ideals are monomial.
pub fn is_integral_extension(
    i: &Ideal,
    j: &Ideal,
    max_k: u32,
    mode: Parallelism,
) -> Result<ExtensionVerdict> {
    if !is_subset(i, j)? {
        return Ok(ExtensionVerdict::No);
    }
    if i.is_monomial() && j.is_monomial() && !i.is_zero() {
        let closure = integral_closure_monomial(&MonomialIdeal::from_ideal(i)?)?;
        let target = MonomialIdeal::from_ideal(j)?;
        return Ok(if target.is_subset(&closure) {
            ExtensionVerdict::Yes
        } else {
            ExtensionVerdict::No
        });
    }
    let verdicts = map(j.generators(), mode, |g| is_integral_over(g, i, max_k));
    let mut all = true;
    for v in verdicts {
        all &= v?.is_integral();
    }
    Ok(if all {
        ExtensionVerdict::Yes
    } else {
        ExtensionVerdict::Unknown
    })
}
