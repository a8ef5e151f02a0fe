//! Ideal-theoretic operations built on Gröbner bases.

use crate::algebra::ideal::check_same_ring;
use crate::algebra::monomial::{minimalize, ExponentVector};
use crate::algebra::{Ideal, Polynomial, TermOrder};
use crate::error::{Error, Result};

use super::basis::{buchberger, groebner_basis};

/// Iteration cap for colon chains in [`saturate`].
pub const SATURATION_CAP: usize = 64;

pub fn normal_form(f: &Polynomial, basis: &super::GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.nvars() != ideal.nvars() {
        return Err(Error::VariableCountMismatch {
            left: f.nvars(),
            right: ideal.nvars(),
        });
    }
    if f.is_zero() {
        return Ok(true);
    }
    if ideal.is_monomial() {
        let gens = monomial_generators(ideal);
        return Ok(f
            .terms()
            .iter()
            .all(|(m, _)| gens.iter().any(|g| g.divides(m))));
    }
    groebner_basis(ideal)?.contains(f)
}

/// `I ⊆ J`.
pub fn is_subset(i: &Ideal, j: &Ideal) -> Result<bool> {
    check_same_ring(i, j)?;
    for g in i.generators() {
        if !ideal_membership(g, j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of ideals via their reduced grevlex bases.
pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    check_same_ring(i, j)?;
    if i.is_monomial() && j.is_monomial() {
        return Ok(monomial_generators(i) == monomial_generators(j));
    }
    let a = groebner_basis(i)?;
    let b = groebner_basis(j)?;
    Ok(a.elements() == b.elements())
}

pub fn is_unit(ideal: &Ideal) -> Result<bool> {
    if ideal.is_monomial() {
        return Ok(ideal.generators().iter().any(|g| g.terms()[0].0.is_one()));
    }
    Ok(groebner_basis(ideal)?.is_unit())
}

pub(crate) fn monomial_generators(ideal: &Ideal) -> Vec<ExponentVector> {
    minimalize(
        ideal
            .generators()
            .iter()
            .map(|g| g.terms()[0].0.clone())
            .collect(),
    )
}

pub(crate) fn monomial_ideal(nvars: usize, gens: Vec<ExponentVector>) -> Ideal {
    Ideal::from_generators(
        nvars,
        minimalize(gens)
            .into_iter()
            .map(Polynomial::monomial)
            .collect(),
    )
}

/// `I ∩ Q[x_k : k ∉ drop]`, returned in the same ambient ring.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    if drop.is_empty() {
        return Ok(ideal.clone());
    }
    if let Some(&v) = drop.iter().find(|&&v| v >= ideal.nvars()) {
        return Err(Error::InvalidParameter(format!(
            "variable x{v} is out of range"
        )));
    }
    let order = TermOrder::eliminating(ideal.nvars(), drop);
    let gb = buchberger(ideal, &order)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| drop.iter().all(|&v| !g.uses_var(v)))
        .cloned()
        .collect();
    Ok(Ideal::from_generators(ideal.nvars(), kept))
}

/// `I ∩ J` via `t·I + (1 - t)·J` with `t` eliminated.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    let n = i.nvars();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(n));
    }
    if i.is_monomial() && j.is_monomial() {
        let a = monomial_generators(i);
        let b = monomial_generators(j);
        let lcms = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x.lcm(y)))
            .collect();
        return Ok(monomial_ideal(n, lcms));
    }
    let t = Polynomial::variable(n + 1, n);
    let one_minus_t = Polynomial::one(n + 1).try_sub(&t)?;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(g.insert_var(n).try_mul(&t)?);
    }
    for g in j.generators() {
        gens.push(g.insert_var(n).try_mul(&one_minus_t)?);
    }
    let lifted = Ideal::from_generators(n + 1, gens);
    let elim = eliminate(&lifted, &[n])?;
    let gens = elim
        .generators()
        .iter()
        .map(|g| g.remove_var(n).expect("t was eliminated"))
        .collect();
    Ok(Ideal::from_generators(n, gens))
}

/// `I : f = {g : g·f ∈ I}`, computed as `(I ∩ (f)) / f`.
pub fn quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = ideal.nvars();
    let principal = Ideal::new(n, vec![f.clone()])?;
    let meet = intersect(ideal, &principal)?;
    let gens = meet
        .generators()
        .iter()
        .map(|g| g.exact_div(f))
        .collect::<Result<Vec<_>>>()?;
    if ideal.is_monomial() && f.is_monomial() {
        return Ok(monomial_ideal(
            n,
            gens.iter().map(|g| g.terms()[0].0.clone()).collect(),
        ));
    }
    Ok(Ideal::from_generators(n, gens))
}

/// `I : f^∞`, iterating colons until the chain stabilizes.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let mut cur = ideal.clone();
    for _ in 0..SATURATION_CAP {
        let next = quotient(&cur, f)?;
        if ideal_equal(&next, &cur)? {
            return reduced_generators(&cur);
        }
        cur = next;
    }
    Err(Error::SaturationDiverged(SATURATION_CAP))
}

/// `I : (x0, ..., xn)^∞ = ∩_i (I : x_i^∞)`.
pub fn saturate_irrelevant(ideal: &Ideal) -> Result<Ideal> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.nvars();
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let mut acc: Option<Ideal> = None;
    for v in 0..n {
        let sat = saturate(ideal, &Polynomial::variable(n, v))?;
        // I ⊆ I:m^∞ ⊆ I:x_v^∞, so an unchanged colon settles it
        if ideal_equal(&sat, ideal)? {
            return reduced_generators(ideal);
        }
        acc = Some(match acc {
            None => sat,
            Some(a) => intersect(&a, &sat)?,
        });
    }
    reduced_generators(&acc.expect("at least one variable"))
}

/// Replaces the generators by the reduced grevlex basis (minimal generators
/// for monomial ideals).
pub fn reduced_generators(ideal: &Ideal) -> Result<Ideal> {
    if ideal.is_monomial() {
        return Ok(monomial_ideal(ideal.nvars(), monomial_generators(ideal)));
    }
    let gb = groebner_basis(ideal)?;
    let out = Ideal::from_generators(ideal.nvars(), gb.elements().to_vec());
    out.store_basis(&TermOrder::grevlex(), gb);
    Ok(out)
}

/// `f ∈ √I` iff `1 ∈ I + (1 - t·f)`.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.nvars() != ideal.nvars() {
        return Err(Error::VariableCountMismatch {
            left: f.nvars(),
            right: ideal.nvars(),
        });
    }
    if f.is_zero() {
        return Ok(true);
    }
    let n = ideal.nvars();
    let t = Polynomial::variable(n + 1, n);
    let rabinowitsch = Polynomial::one(n + 1).try_sub(&t.try_mul(&f.insert_var(n))?)?;
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.insert_var(n)).collect();
    gens.push(rabinowitsch);
    let lifted = Ideal::from_generators(n + 1, gens);
    Ok(groebner_basis(&lifted)?.is_unit())
}

/// Generators of `I^k`.
pub fn power(ideal: &Ideal, k: u32) -> Result<Ideal> {
    let mut acc = Ideal::unit(ideal.nvars());
    for _ in 0..k {
        acc = acc.product(ideal)?;
    }
    Ok(acc)
}
