//! Buchberger's algorithm with sugar selection and the Gebauer–Möller
//! pair criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::monomial::{minimalize, ExponentVector};
use crate::algebra::{Ideal, Polynomial, Rational, TermOrder};
use crate::error::{Error, Result};

/// Terms sorted ascending under the active order; the leading term is last.
pub(crate) type Terms = Vec<(ExponentVector, Rational)>;

/// A reduced, monic Gröbner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    nvars: usize,
    elements: Vec<Polynomial>,
    sorted: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Elements sorted by leading monomial, ascending.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.sorted
            .iter()
            .map(|t| t.last().unwrap().0.clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0].len() == 1 && self.sorted[0][0].0.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: f.nvars(),
                right: self.nvars,
            });
        }
        let t = to_terms(f, &self.order);
        let refs: Vec<&Terms> = self.sorted.iter().collect();
        Ok(from_terms(self.nvars, reduce(t, &refs, &self.order)))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Every S-polynomial reduces to zero, leading monomials form an
    /// antichain, and all elements are monic.
    pub fn self_check(&self) -> bool {
        let refs: Vec<&Terms> = self.sorted.iter().collect();
        let leads = self.leading_monomials();
        for (i, a) in leads.iter().enumerate() {
            if !self.sorted[i].last().unwrap().1.is_one() {
                return false;
            }
            for (j, b) in leads.iter().enumerate() {
                if i != j && a.divides(b) {
                    return false;
                }
            }
        }
        for i in 0..self.sorted.len() {
            for j in (i + 1)..self.sorted.len() {
                let s = s_polynomial(&self.sorted[i], &self.sorted[j], &self.order);
                if !reduce(s, &refs, &self.order).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn to_terms(f: &Polynomial, order: &TermOrder) -> Terms {
    let mut t = f.sorted_terms(order);
    t.reverse();
    t
}

pub(crate) fn from_terms(nvars: usize, t: Terms) -> Polynomial {
    Polynomial::from_terms(nvars, t)
}

/// `p - c * x^m * g`, all ascending.
pub(crate) fn sub_scaled(
    p: &Terms,
    c: &Rational,
    m: &ExponentVector,
    g: &Terms,
    order: &TermOrder,
) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut gi = g.iter().map(|(e, d)| (e.mul(m), d * c)).peekable();
    let mut pi = p.iter().peekable();
    loop {
        match (pi.peek(), gi.peek()) {
            (Some(a), Some(b)) => match order.compare(&a.0, &b.0) {
                Ordering::Less => out.push(pi.next().unwrap().clone()),
                Ordering::Greater => {
                    let (e, d) = gi.next().unwrap();
                    out.push((e, -d));
                }
                Ordering::Equal => {
                    let a = pi.next().unwrap();
                    let (_, d) = gi.next().unwrap();
                    let v = &a.1 - d;
                    if !v.is_zero() {
                        out.push((a.0.clone(), v));
                    }
                }
            },
            (Some(_), None) => out.push(pi.next().unwrap().clone()),
            (None, Some(_)) => {
                let (e, d) = gi.next().unwrap();
                out.push((e, -d));
            }
            (None, None) => break,
        }
    }
    out
}

/// Full reduction of `p` modulo `basis`; returns the remainder, ascending.
pub(crate) fn reduce(mut p: Terms, basis: &[&Terms], order: &TermOrder) -> Terms {
    let mut rem: Terms = Vec::new();
    while let Some((m, c)) = p.last() {
        let hit = basis.iter().find(|g| g.last().unwrap().0.divides(m));
        match hit {
            Some(g) => {
                let (gm, gc) = g.last().unwrap();
                let q = m.checked_div(gm).unwrap();
                let coef = c / gc;
                p = sub_scaled(&p, &coef, &q, g, order);
            }
            None => rem.push(p.pop().unwrap()),
        }
    }
    rem.reverse();
    rem
}

pub(crate) fn s_polynomial(f: &Terms, g: &Terms, order: &TermOrder) -> Terms {
    let (fm, fc) = f.last().unwrap();
    let (gm, gc) = g.last().unwrap();
    let l = fm.lcm(gm);
    let uf = l.checked_div(fm).unwrap();
    let ug = l.checked_div(gm).unwrap();
    let fpart: Terms = f.iter().map(|(e, c)| (e.mul(&uf), c / fc)).collect();
    let mut s = sub_scaled(&fpart, &gc.recip(), &ug, g, order);
    // the leading terms cancel exactly
    debug_assert!(s.last().is_none_or(|(e, _)| *e != l));
    s.shrink_to_fit();
    s
}

fn make_monic(t: &mut Terms) {
    if let Some((_, c)) = t.last() {
        if !c.is_one() {
            let inv = c.recip();
            for (_, d) in t.iter_mut() {
                *d *= &inv;
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
    sugar: u32,
}

/// Computes (or fetches from the ideal's cache) the reduced Gröbner basis.
pub fn buchberger(ideal: &Ideal, order: &TermOrder) -> Result<Arc<GroebnerBasis>> {
    if let Some(p) = &order.perm {
        if p.len() != ideal.nvars() {
            return Err(Error::VariableCountMismatch {
                left: p.len(),
                right: ideal.nvars(),
            });
        }
    }
    if let Some(b) = ideal.cached_basis(order) {
        return Ok(b);
    }
    let basis = Arc::new(compute(ideal, order));
    ideal.store_basis(order, basis.clone());
    Ok(basis)
}

/// Reduced basis under grevlex.
pub fn groebner_basis(ideal: &Ideal) -> Result<Arc<GroebnerBasis>> {
    buchberger(ideal, &TermOrder::grevlex())
}

fn compute(ideal: &Ideal, order: &TermOrder) -> GroebnerBasis {
    let nvars = ideal.nvars();
    if ideal.is_monomial() {
        let leads = minimalize(
            ideal
                .generators()
                .iter()
                .map(|g| g.terms()[0].0.clone())
                .collect(),
        );
        let polys = leads
            .into_iter()
            .map(|m| vec![(m, Rational::one())])
            .collect();
        return finish(nvars, order, polys);
    }

    let mut polys: Vec<Terms> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Terms> = ideal
        .generators()
        .iter()
        .map(|g| to_terms(g, order))
        .collect();
    // deterministic insertion: smallest leading monomial first
    inputs.sort_by(|a, b| order.compare(&a.last().unwrap().0, &b.last().unwrap().0));

    for g in inputs {
        let refs: Vec<&Terms> = active.iter().map(|&k| &polys[k]).collect();
        let deg = g.iter().map(|(e, _)| e.degree()).max().unwrap_or(0);
        let mut h = reduce(g, &refs, order);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if h.last().unwrap().0.is_one() {
            return finish(nvars, order, vec![h]);
        }
        polys.push(h);
        sugar.push(deg);
        update(&polys, &sugar, &mut active, &mut pairs, polys.len() - 1);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| order.compare(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&polys[pair.i], &polys[pair.j], order);
        let refs: Vec<&Terms> = active.iter().map(|&k| &polys[k]).collect();
        let mut h = reduce(s, &refs, order);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if h.last().unwrap().0.is_one() {
            return finish(nvars, order, vec![h]);
        }
        polys.push(h);
        sugar.push(pair.sugar);
        update(&polys, &sugar, &mut active, &mut pairs, polys.len() - 1);
    }

    let kept = active.into_iter().map(|k| polys[k].clone()).collect();
    finish(nvars, order, kept)
}

/// Gebauer–Möller update for a new basis element `h`.
fn update(
    polys: &[Terms],
    sugar: &[u32],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
) {
    let lm = |k: usize| &polys[k].last().unwrap().0;
    let hm = lm(h).clone();
    let new_pair = |g: usize| {
        let l = hm.lcm(lm(g));
        let sh = sugar[h] + l.degree() - hm.degree();
        let sg = sugar[g] + l.degree() - lm(g).degree();
        Pair {
            i: g.min(h),
            j: g.max(h),
            lcm: l,
            sugar: sh.max(sg),
        }
    };
    let cands: Vec<Pair> = active.iter().map(|&g| new_pair(g)).collect();

    // chain criterion among the new pairs
    let mut keep = vec![true; cands.len()];
    for a in 0..cands.len() {
        let other = |k: usize| {
            if cands[k].i == h {
                cands[k].j
            } else {
                cands[k].i
            }
        };
        let ga = other(a);
        if hm.is_coprime(lm(ga)) {
            continue;
        }
        for b in 0..cands.len() {
            if a == b || !keep[b] {
                continue;
            }
            let divides = cands[b].lcm.divides(&cands[a].lcm);
            if divides && (cands[b].lcm != cands[a].lcm || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // product criterion
    let fresh: Vec<Pair> = cands
        .into_iter()
        .zip(keep)
        .filter(|(p, k)| {
            let g = if p.i == h { p.j } else { p.i };
            *k && !hm.is_coprime(lm(g))
        })
        .map(|(p, _)| p)
        .collect();

    // old pairs made redundant by h
    pairs.retain(|p| {
        if !hm.divides(&p.lcm) {
            return true;
        }
        let li = hm.lcm(lm(p.i));
        let lj = hm.lcm(lm(p.j));
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(fresh);

    active.retain(|&g| !hm.divides(lm(g)));
    active.push(h);
}

/// Minimalizes, interreduces and sorts.
fn finish(nvars: usize, order: &TermOrder, mut polys: Vec<Terms>) -> GroebnerBasis {
    polys.retain(|p| !p.is_empty());
    polys.sort_by(|a, b| order.compare(&a.last().unwrap().0, &b.last().unwrap().0));
    let mut minimal: Vec<Terms> = Vec::new();
    for p in polys {
        let m = &p.last().unwrap().0;
        if minimal.iter().any(|q| q.last().unwrap().0.divides(m)) {
            continue;
        }
        minimal.retain(|q| !m.divides(&q.last().unwrap().0));
        minimal.push(p);
    }
    let mut reduced: Vec<Terms> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let mut p = minimal[k].clone();
        make_monic(&mut p);
        let lead = p.pop().unwrap();
        let others: Vec<&Terms> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, q)| q)
            .collect();
        let mut tail = reduce(p, &others, order);
        tail.push(lead);
        make_monic(&mut tail);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| order.compare(&a.last().unwrap().0, &b.last().unwrap().0));
    let elements = reduced
        .iter()
        .map(|t| from_terms(nvars, t.clone()))
        .collect();
    GroebnerBasis {
        order: order.clone(),
        nvars,
        elements,
        sorted: reduced,
    }
}
