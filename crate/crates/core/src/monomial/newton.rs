//! Newton polyhedra `P(I) = conv(generators) + orthant` and the exact
//! membership oracle behind lct, multiplier ideals and integral closure.

use std::sync::Mutex;

use num_traits::{One, Signed, Zero};

use super::MonomialIdeal;
use crate::algebra::monomial::{minimalize, ExponentVector};
use crate::algebra::rational::{ceil_to_i64, int};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::lp::{simplex_solve, LinearProgram, LpResult, LpStatus, Relation};

/// A valid inequality `w · x >= h` for `P`, with `w >= 0` and `Σ w = 1`.
#[derive(Clone, Debug, PartialEq)]
struct Cut {
    w: Vec<Rational>,
    h: Rational,
}

/// Answer of the slack program `s* = max { s : p - s·1 ∈ cP }`.
#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub member: bool,
    pub slack: Rational,
}

#[derive(Debug)]
pub struct NewtonPolyhedron {
    nvars: usize,
    points: Vec<ExponentVector>,
    cuts: Mutex<Vec<Cut>>,
}

impl Clone for NewtonPolyhedron {
    fn clone(&self) -> Self {
        NewtonPolyhedron {
            nvars: self.nvars,
            points: self.points.clone(),
            cuts: Mutex::new(self.cuts.lock().unwrap().clone()),
        }
    }
}

impl NewtonPolyhedron {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        NewtonPolyhedron {
            nvars: ideal.nvars(),
            points: ideal.generators().to_vec(),
            cuts: Mutex::new(Vec::new()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    /// The slack program for `p` against `scale · P`, in variables
    /// `(t_1, .., t_g, s)` with `s` free.
    fn slack_program(&self, p: &[Rational], scale: &Rational) -> LinearProgram {
        let g = self.points.len();
        let mut obj = vec![Rational::zero(); g + 1];
        obj[g] = -Rational::one();
        let mut lp = LinearProgram::minimize(obj);
        lp.set_free(g);
        for (i, pi) in p.iter().enumerate() {
            let mut row: Vec<Rational> = self.points.iter().map(|a| int(a.get(i) as i64)).collect();
            row.push(Rational::one());
            lp.constrain(row, Relation::Le, pi / scale);
        }
        let mut sum = vec![Rational::one(); g + 1];
        sum[g] = Rational::zero();
        lp.constrain(sum, Relation::Eq, Rational::one());
        lp
    }

    /// Exact slack of `p` against `scale · P`; the optimal dual is cached
    /// as a cut. The reported slack is measured in units of `P`.
    fn solve_slack(&self, p: &[Rational], scale: &Rational) -> Result<Rational> {
        let lp = self.slack_program(p, scale);
        let r = simplex_solve(&lp)?;
        debug_assert!(r.verify(&lp));
        let (Some(opt), LpStatus::Optimal) = (&r.optimum, r.status) else {
            unreachable!("the slack program is feasible and bounded");
        };
        let n = self.nvars;
        let cut = Cut {
            w: r.dual[..n].iter().map(|y| -y).collect(),
            h: r.dual[n].clone(),
        };
        let mut cuts = self.cuts.lock().unwrap();
        if !cuts.contains(&cut) {
            cuts.push(cut);
        }
        Ok(-opt.clone())
    }

    /// `true` when a cached cut proves `p ∉ scale·P` (or `p ∉ Int(scale·P)`
    /// when `strict`).
    fn cut_rejects(&self, p: &[Rational], scale: &Rational, strict: bool) -> bool {
        let cuts = self.cuts.lock().unwrap();
        cuts.iter().any(|c| {
            let lhs =
                c.w.iter()
                    .zip(p)
                    .fold(Rational::zero(), |acc, (w, x)| acc + w * x);
            let rhs = &c.h * scale;
            if strict {
                lhs <= rhs
            } else {
                lhs < rhs
            }
        })
    }

    fn contains_scaled(&self, p: &[Rational], scale: &Rational, strict: bool) -> Result<bool> {
        if self.cut_rejects(p, scale, strict) {
            return Ok(false);
        }
        let s = self.solve_slack(p, scale)?;
        Ok(if strict {
            s.is_positive()
        } else {
            !s.is_negative()
        })
    }

    /// Minimal lattice points `a` in the box `a <= bounds` for which
    /// `a + offset·1` lies in `scale·P` (its interior when `strict`).
    pub(crate) fn minimal_points(
        &self,
        scale: &Rational,
        strict: bool,
        offset: u32,
        bounds: &[u32],
    ) -> Result<Vec<ExponentVector>> {
        let n = self.nvars;
        if n == 0 {
            let p: Vec<Rational> = Vec::new();
            return Ok(if self.contains_scaled(&p, scale, strict)? {
                vec![ExponentVector::one(0)]
            } else {
                Vec::new()
            });
        }
        // up-closure: anything above a known member is a member
        let mut known: Vec<Vec<u32>> = Vec::new();
        let member = |a: &[u32], known: &mut Vec<Vec<u32>>| -> Result<bool> {
            if known.iter().any(|q| q.iter().zip(a).all(|(x, y)| x <= y)) {
                return Ok(true);
            }
            let p: Vec<Rational> = a.iter().map(|&x| int((x + offset) as i64)).collect();
            let hit = self.contains_scaled(&p, scale, strict)?;
            if hit {
                known.push(a.to_vec());
            }
            Ok(hit)
        };

        // Walk the prefixes (first n-1 coordinates) in lex order. The least
        // member along the last axis can only drop as the prefix grows.
        let last = n - 1;
        let dims: Vec<usize> = bounds[..last].iter().map(|&b| b as usize + 1).collect();
        let size: usize = dims.iter().product();
        let none = bounds[last] + 1;
        let mut threshold = vec![none; size];
        let mut out = Vec::new();
        let mut prefix = vec![0u32; last];
        for flat in 0..size {
            let mut ub = none;
            let mut stride = 1;
            for k in (0..last).rev() {
                if prefix[k] > 0 {
                    ub = ub.min(threshold[flat - stride]);
                }
                stride *= dims[k];
            }
            let mut t = ub;
            let mut a = prefix.clone();
            a.push(0);
            for x in 0..ub {
                a[last] = x;
                if member(&a, &mut known)? {
                    t = x;
                    break;
                }
            }
            threshold[flat] = t;
            if t < none {
                a[last] = t;
                out.push(ExponentVector::new(a));
            }
            // advance the prefix (last coordinate fastest)
            for k in (0..last).rev() {
                if prefix[k] < bounds[k] {
                    prefix[k] += 1;
                    break;
                }
                prefix[k] = 0;
            }
        }
        Ok(minimalize(out))
    }

    /// Generators of `𝒥(c·I)`: `x^a` with `a + 1 ∈ Int(c·P)`.
    ///
    /// Minimal generators satisfy `a_i <= ⌈c·M_i⌉`: if `a + 1` is interior
    /// and `a_i > c·M_i`, lowering `a_i` by one keeps the point interior,
    /// since every point of `conv(generators)` has `i`-th coordinate at
    /// most `M_i`.
    pub fn multiplier_ideal(&self, c: &Rational, m: &[u32]) -> Result<Vec<ExponentVector>> {
        let bounds: Vec<u32> = m
            .iter()
            .map(|&mi| ceil_to_i64(&(c * int(mi as i64))).max(0) as u32)
            .collect();
        self.minimal_points(c, true, 1, &bounds)
    }

    /// Minimal lattice points of `P`; they lie in the box `a <= M` because
    /// any point above `M_i` in coordinate `i` can be lowered to `M_i`.
    pub fn integral_closure(&self, m: &[u32]) -> Result<Vec<ExponentVector>> {
        self.minimal_points(&Rational::one(), false, 0, m)
    }
}

/// Exact (interior) membership of `p` in `P` with the slack
/// `s* = max { s : p - s·1 ∈ P }`.
pub fn newton_membership(
    p: &[Rational],
    poly: &NewtonPolyhedron,
    strict: bool,
) -> Result<Membership> {
    if p.len() != poly.nvars {
        return Err(Error::VariableCountMismatch {
            left: p.len(),
            right: poly.nvars,
        });
    }
    if p.iter().any(Signed::is_negative) {
        return Err(Error::InvalidParameter(
            "membership point must be non-negative".into(),
        ));
    }
    let slack = poly.solve_slack(p, &Rational::one())?;
    let member = if strict {
        slack.is_positive()
    } else {
        !slack.is_negative()
    };
    Ok(Membership { member, slack })
}

/// The log-canonical threshold with its LP certificate.
#[derive(Clone, Debug)]
pub struct LctResult {
    pub lct: Rational,
    /// `λ* = 1/lct`, the least `λ` with `λ·1 ∈ P`.
    pub lambda: Rational,
    /// Convex weights on the generators attaining `λ*·1 ∈ P`.
    pub witness: Vec<Rational>,
    pub program: LinearProgram,
    pub certificate: LpResult,
}

impl LctResult {
    /// Re-checks primal and dual certificates by substitution.
    pub fn verify(&self) -> bool {
        self.certificate.status == LpStatus::Optimal
            && self.certificate.verify(&self.program)
            && self.certificate.optimum.as_ref() == Some(&self.lambda)
            && self.lambda.is_positive()
            && self.lct == self.lambda.recip()
    }
}

/// `lct(I) = 1 / min { λ : λ·1 ∈ P(I) }`.
pub fn lct_monomial(ideal: &MonomialIdeal) -> Result<LctResult> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let g = ideal.generators().len();
    let n = ideal.nvars();
    // variables (t_1, .., t_g, λ)
    let mut obj = vec![Rational::zero(); g + 1];
    obj[g] = Rational::one();
    let mut lp = LinearProgram::minimize(obj);
    for i in 0..n {
        let mut row: Vec<Rational> = ideal
            .generators()
            .iter()
            .map(|a| int(a.get(i) as i64))
            .collect();
        row.push(-Rational::one());
        lp.constrain(row, Relation::Le, Rational::zero());
    }
    let mut sum = vec![Rational::one(); g + 1];
    sum[g] = Rational::zero();
    lp.constrain(sum, Relation::Eq, Rational::one());
    let r = simplex_solve(&lp)?;
    let lambda = r
        .optimum
        .clone()
        .expect("the lct program is feasible and bounded");
    Ok(LctResult {
        lct: lambda.recip(),
        witness: r.primal[..g].to_vec(),
        lambda,
        program: lp,
        certificate: r,
    })
}

/// `𝒥(c·I)` by Howald's description.
pub fn multiplier_ideal_monomial(ideal: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    if !c.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "multiplier ideal weight must be positive, got {c}"
        )));
    }
    let poly = NewtonPolyhedron::new(ideal);
    let gens = poly.multiplier_ideal(c, &ideal.max_exponents())?;
    MonomialIdeal::new(ideal.nvars(), gens)
}

/// `Ī` as the monomials with exponent in `P(I)`.
pub fn integral_closure_monomial(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let poly = NewtonPolyhedron::new(ideal);
    let gens = poly.integral_closure(&ideal.max_exponents())?;
    MonomialIdeal::new(ideal.nvars(), gens)
}
