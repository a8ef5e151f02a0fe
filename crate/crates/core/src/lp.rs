//! Exact two-phase primal simplex over the rationals with Bland's rule.
//!
//! Every result carries a certificate that [`LpResult::verify`] re-checks
//! by substitution: primal and dual solutions for optimal programs, a
//! Farkas multiplier for infeasible ones, and an improving ray for
//! unbounded ones.

use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    fn holds(&self, x: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// Minimize `objective · x` subject to the constraints; each variable is
/// either non-negative (the default) or free.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
    nonneg: Vec<bool>,
}

impl LinearProgram {
    pub fn minimize(objective: Vec<Rational>) -> Self {
        let n = objective.len();
        LinearProgram {
            objective,
            constraints: Vec::new(),
            nonneg: vec![true; n],
        }
    }

    pub fn constrain(
        &mut self,
        coeffs: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> &mut Self {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        if let Some(f) = self.nonneg.get_mut(var) {
            *f = false;
        }
        self
    }

    pub fn nvars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_nonneg(&self, var: usize) -> bool {
        self.nonneg[var]
    }

    fn check(&self) -> Result<()> {
        let n = self.nvars();
        for (k, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(Error::LpDimension(format!(
                    "constraint {k} has {} coefficients, expected {n}",
                    c.coeffs.len()
                )));
            }
        }
        Ok(())
    }

    fn primal_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.nvars()
            && x.iter()
                .zip(&self.nonneg)
                .all(|(v, &nn)| !nn || !v.is_negative())
            && self.constraints.iter().all(|c| c.holds(x))
    }

    /// Sign conventions for a multiplier `y`: `y_i <= 0` on `<=` rows,
    /// `y_i >= 0` on `>=` rows, free on equality rows.
    fn multiplier_signs_ok(&self, y: &[Rational]) -> bool {
        y.len() == self.constraints.len()
            && self
                .constraints
                .iter()
                .zip(y)
                .all(|(c, v)| match c.relation {
                    Relation::Le => !v.is_positive(),
                    Relation::Ge => !v.is_negative(),
                    Relation::Eq => true,
                })
    }

    /// `Aᵀ y`.
    fn transpose_times(&self, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.nvars()];
        for (c, v) in self.constraints.iter().zip(y) {
            if v.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(&c.coeffs) {
                *o += a * v;
            }
        }
        out
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Outcome of [`simplex_solve`].
///
/// * optimal: `primal` and `dual` are optimal and `optimum` is their common value;
/// * infeasible: `dual` is a Farkas multiplier;
/// * unbounded: `primal` is feasible and `ray` an improving direction.
#[derive(Clone, Debug, PartialEq)]
pub struct LpResult {
    pub status: LpStatus,
    pub optimum: Option<Rational>,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
    pub ray: Vec<Rational>,
}

impl LpResult {
    /// Re-checks the certificate against `lp` by direct substitution.
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        match self.status {
            LpStatus::Optimal => {
                let Some(opt) = &self.optimum else {
                    return false;
                };
                if !lp.primal_feasible(&self.primal) || !lp.multiplier_signs_ok(&self.dual) {
                    return false;
                }
                let aty = lp.transpose_times(&self.dual);
                let dual_ok = aty
                    .iter()
                    .zip(&lp.objective)
                    .zip(&lp.nonneg)
                    .all(|((a, c), &nn)| if nn { a <= c } else { a == c });
                let by = lp
                    .constraints
                    .iter()
                    .zip(&self.dual)
                    .fold(Rational::zero(), |acc, (c, y)| acc + &c.rhs * y);
                dual_ok && dot(&lp.objective, &self.primal) == *opt && by == *opt
            }
            LpStatus::Infeasible => {
                if !lp.multiplier_signs_ok(&self.dual) {
                    return false;
                }
                let aty = lp.transpose_times(&self.dual);
                let cone_ok =
                    aty.iter()
                        .zip(&lp.nonneg)
                        .all(|(a, &nn)| if nn { !a.is_positive() } else { a.is_zero() });
                let by = lp
                    .constraints
                    .iter()
                    .zip(&self.dual)
                    .fold(Rational::zero(), |acc, (c, y)| acc + &c.rhs * y);
                cone_ok && by.is_positive()
            }
            LpStatus::Unbounded => {
                if !lp.primal_feasible(&self.primal) || self.ray.len() != lp.nvars() {
                    return false;
                }
                let sign_ok = self
                    .ray
                    .iter()
                    .zip(&lp.nonneg)
                    .all(|(d, &nn)| !nn || !d.is_negative());
                let rows_ok = lp.constraints.iter().all(|c| {
                    let v = dot(&c.coeffs, &self.ray);
                    match c.relation {
                        Relation::Le => !v.is_positive(),
                        Relation::Eq => v.is_zero(),
                        Relation::Ge => !v.is_negative(),
                    }
                });
                sign_ok && rows_ok && dot(&lp.objective, &self.ray).is_negative()
            }
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
}

enum Phase {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let mut rc = cost[j].clone();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if !cost[b].is_zero() && !row[j].is_zero() {
                rc -= &cost[b] * &row[j];
            }
        }
        rc
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test
    /// broken by lowest basic index.
    fn run(&mut self, cost: &[Rational], enterable: usize) -> Phase {
        let rhs = cost.len();
        loop {
            let Some(j) = (0..enterable).find(|&j| self.reduced_cost(cost, j).is_negative()) else {
                return Phase::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[j];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, j),
                None => return Phase::Unbounded(j),
            }
        }
    }

    fn values(&self, ncols: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); ncols];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            v[b] = row[ncols].clone();
        }
        v
    }

    /// `c_B B⁻¹`, read from the columns that started as the identity.
    fn multipliers(&self, cost: &[Rational], identity_start: usize) -> Vec<Rational> {
        (0..self.rows.len())
            .map(|i| {
                self.rows
                    .iter()
                    .zip(&self.basis)
                    .fold(Rational::zero(), |acc, (row, &b)| {
                        acc + &cost[b] * &row[identity_start + i]
                    })
            })
            .collect()
    }
}

/// Solves `lp` exactly.
pub fn simplex_solve(lp: &LinearProgram) -> Result<LpResult> {
    lp.check()?;
    let n = lp.nvars();
    let m = lp.constraints.len();

    // columns: x+ for every variable, x- for free ones, slacks, artificials
    let mut minus = vec![None; n];
    let mut ncols = n;
    for (j, &nn) in lp.nonneg.iter().enumerate() {
        if !nn {
            minus[j] = Some(ncols);
            ncols += 1;
        }
    }
    let mut slack = vec![None; m];
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.relation != Relation::Eq {
            slack[i] = Some(ncols);
            ncols += 1;
        }
    }
    let art = ncols;
    ncols += m;

    // rows are negated where needed so that every right-hand side is >= 0
    let mut flip = vec![false; m];
    let mut rows = Vec::with_capacity(m);
    for (i, c) in lp.constraints.iter().enumerate() {
        let s = if c.rhs.is_negative() {
            -Rational::one()
        } else {
            Rational::one()
        };
        flip[i] = c.rhs.is_negative();
        let mut row = vec![Rational::zero(); ncols + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a * &s;
            if let Some(mj) = minus[j] {
                row[mj] = -(a * &s);
            }
        }
        if let Some(sj) = slack[i] {
            let unit = if c.relation == Relation::Le {
                Rational::one()
            } else {
                -Rational::one()
            };
            row[sj] = unit * &s;
        }
        row[art + i] = Rational::one();
        row[ncols] = &c.rhs * &s;
        rows.push(row);
    }
    let mut tab = Tableau {
        rows,
        basis: (art..art + m).collect(),
    };
    let unflip = |y: Vec<Rational>| -> Vec<Rational> {
        y.into_iter()
            .zip(&flip)
            .map(|(v, &f)| if f { -v } else { v })
            .collect()
    };
    let to_original = |z: &[Rational]| -> Vec<Rational> {
        (0..n)
            .map(|j| match minus[j] {
                Some(mj) => &z[j] - &z[mj],
                None => z[j].clone(),
            })
            .collect()
    };

    // phase 1
    let mut cost1 = vec![Rational::zero(); ncols];
    for c in cost1.iter_mut().skip(art) {
        *c = Rational::one();
    }
    tab.run(&cost1, art);
    let infeas = tab
        .rows
        .iter()
        .zip(&tab.basis)
        .fold(Rational::zero(), |acc, (row, &b)| {
            acc + &cost1[b] * &row[ncols]
        });
    if infeas.is_positive() {
        let y = tab.multipliers(&cost1, art);
        return Ok(LpResult {
            status: LpStatus::Infeasible,
            optimum: None,
            primal: Vec::new(),
            dual: unflip(y),
            ray: Vec::new(),
        });
    }
    for r in 0..m {
        if tab.basis[r] >= art {
            if let Some(c) = (0..art).find(|&c| !tab.rows[r][c].is_zero()) {
                tab.pivot(r, c);
            }
        }
    }

    // phase 2
    let mut cost2 = vec![Rational::zero(); ncols];
    for j in 0..n {
        cost2[j] = lp.objective[j].clone();
        if let Some(mj) = minus[j] {
            cost2[mj] = -lp.objective[j].clone();
        }
    }
    match tab.run(&cost2, art) {
        Phase::Optimal => {
            let x = to_original(&tab.values(ncols));
            let y = unflip(tab.multipliers(&cost2, art));
            Ok(LpResult {
                status: LpStatus::Optimal,
                optimum: Some(dot(&lp.objective, &x)),
                primal: x,
                dual: y,
                ray: Vec::new(),
            })
        }
        Phase::Unbounded(j) => {
            let x = to_original(&tab.values(ncols));
            let mut d = vec![Rational::zero(); ncols];
            d[j] = Rational::one();
            for (row, &b) in tab.rows.iter().zip(&tab.basis) {
                d[b] = -row[j].clone();
            }
            Ok(LpResult {
                status: LpStatus::Unbounded,
                optimum: None,
                primal: x,
                dual: Vec::new(),
                ray: to_original(&d),
            })
        }
    }
}

#[cfg(test)]
mod tests;
