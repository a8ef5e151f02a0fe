//! Schreyer resolutions followed by graded minimization.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::BettiTable;
use crate::algebra::{ExponentVector, Ideal, Polynomial, Rational, TermOrder};
use crate::error::{Error, Result};
use crate::groebner::groebner_basis;

static GREVLEX: TermOrder = TermOrder::grevlex();

/// Position of a term `x^a e_c` in the Schreyer order: its image monomial
/// in `S` followed by a tie rank (smaller rank means larger term).
#[derive(Clone, Debug, PartialEq, Eq)]
struct Key {
    total: ExponentVector,
    rank: usize,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        GREVLEX
            .compare(&self.total, &other.total)
            .then_with(|| other.rank.cmp(&self.rank))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
struct Term {
    comp: usize,
    mono: ExponentVector,
    coef: Rational,
}

type Vector = BTreeMap<Key, Term>;

/// Basis data of one free module in the frame.
struct Frame {
    total: Vec<ExponentVector>,
    rank: Vec<usize>,
}

impl Frame {
    fn key(&self, comp: usize, mono: &ExponentVector) -> Key {
        Key {
            total: mono.mul(&self.total[comp]),
            rank: self.rank[comp],
        }
    }

    /// The frame whose basis elements map onto `elems`.
    fn next(&self, elems: &[Vector]) -> Frame {
        let total: Vec<ExponentVector> = elems.iter().map(|v| lead(v).0.total.clone()).collect();
        let mut idx: Vec<usize> = (0..elems.len()).collect();
        idx.sort_by_key(|&j| (self.rank[lead(&elems[j]).1.comp], j));
        let mut rank = vec![0; elems.len()];
        for (pos, j) in idx.into_iter().enumerate() {
            rank[j] = pos;
        }
        Frame { total, rank }
    }
}

fn lead(v: &Vector) -> (&Key, &Term) {
    v.last_key_value().expect("nonzero module element")
}

fn add_term(v: &mut Vector, key: Key, term: Term) {
    match v.entry(key) {
        Entry::Occupied(mut e) => {
            let s = &e.get().coef + &term.coef;
            if s.is_zero() {
                e.remove();
            } else {
                e.get_mut().coef = s;
            }
        }
        Entry::Vacant(e) => {
            e.insert(term);
        }
    }
}

/// `v += c * x^m * g`.
fn axpy(v: &mut Vector, c: &Rational, m: &ExponentVector, g: &Vector) {
    for (k, t) in g {
        let key = Key {
            total: k.total.mul(m),
            rank: k.rank,
        };
        let term = Term {
            comp: t.comp,
            mono: t.mono.mul(m),
            coef: &t.coef * c,
        };
        add_term(v, key, term);
    }
}

/// Lead component ascending, then lead monomial lex-descending. This
/// ordering bounds the length of the Schreyer resolution.
fn sort_elements(elems: &mut [Vector]) {
    let lex = TermOrder::lex();
    elems.sort_by(|a, b| {
        let (ta, tb) = (lead(a).1, lead(b).1);
        ta.comp
            .cmp(&tb.comp)
            .then_with(|| lex.compare(&tb.mono, &ta.mono))
    });
}

/// Schreyer syzygies of `elems` (a Gröbner basis of their span), expressed in
/// the frame `cur` whose basis maps onto `elems`.
fn syzygies(elems: &[Vector], cur: &Frame) -> Vec<Vector> {
    let leads: Vec<Term> = elems.iter().map(|v| lead(v).1.clone()).collect();
    let mut by_comp: HashMap<usize, Vec<usize>> = HashMap::new();
    for (l, t) in leads.iter().enumerate() {
        by_comp.entry(t.comp).or_default().push(l);
    }
    let mut out = Vec::new();
    for j in 0..elems.len() {
        let cands: Vec<(usize, ExponentVector, ExponentVector)> = ((j + 1)..elems.len())
            .filter(|&k| leads[k].comp == leads[j].comp)
            .map(|k| {
                let l = leads[j].mono.lcm(&leads[k].mono);
                (
                    k,
                    l.checked_div(&leads[j].mono).unwrap(),
                    l.checked_div(&leads[k].mono).unwrap(),
                )
            })
            .collect();
        for (a, (k, mjk, mkj)) in cands.iter().enumerate() {
            let redundant = cands
                .iter()
                .enumerate()
                .any(|(b, (_, m2, _))| b != a && m2.divides(mjk) && (m2 != mjk || b < a));
            if redundant {
                continue;
            }
            let cj = leads[j].coef.recip();
            let ck = -leads[*k].coef.recip();
            let mut s = Vector::new();
            axpy(&mut s, &cj, mjk, &elems[j]);
            axpy(&mut s, &ck, mkj, &elems[*k]);
            let mut sigma = Vector::new();
            add_term(
                &mut sigma,
                cur.key(j, mjk),
                Term {
                    comp: j,
                    mono: mjk.clone(),
                    coef: cj,
                },
            );
            add_term(
                &mut sigma,
                cur.key(*k, mkj),
                Term {
                    comp: *k,
                    mono: mkj.clone(),
                    coef: ck,
                },
            );
            while let Some((_, t)) = s.last_key_value() {
                let t = t.clone();
                let l = *by_comp
                    .get(&t.comp)
                    .and_then(|ls| ls.iter().find(|&&l| leads[l].mono.divides(&t.mono)))
                    .expect("the frame is a Gröbner basis, so S-vectors reduce to zero");
                let q = t.mono.checked_div(&leads[l].mono).unwrap();
                let c = &t.coef / &leads[l].coef;
                axpy(&mut s, &-&c, &q, &elems[l]);
                add_term(
                    &mut sigma,
                    cur.key(l, &q),
                    Term {
                        comp: l,
                        mono: q,
                        coef: -c,
                    },
                );
            }
            debug_assert_eq!(lead(&sigma).1.comp, j);
            out.push(sigma);
        }
    }
    sort_elements(&mut out);
    out
}

/// A dense matrix of polynomials, stored by rows.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    fn zero(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            nvars,
            rows,
            cols,
            entries: vec![vec![Polynomial::zero(nvars); cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r][c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidParameter(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zero(self.nvars, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for k in 0..self.cols {
                    if !self.entries[r][k].is_zero() && !other.entries[k][c].is_zero() {
                        acc = acc.try_add(&self.entries[r][k].try_mul(&other.entries[k][c])?)?;
                    }
                }
                out.entries[r][c] = acc;
            }
        }
        Ok(out)
    }

    fn remove_row(&mut self, r: usize) {
        self.entries.remove(r);
        self.rows -= 1;
    }

    fn remove_col(&mut self, c: usize) {
        for row in &mut self.entries {
            row.remove(c);
        }
        self.cols -= 1;
    }

    fn first_unit(&self) -> Option<(usize, usize, Rational)> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if let [(m, u)] = e.terms() {
                    if m.is_one() {
                        return Some((r, c, u.clone()));
                    }
                }
            }
        }
        None
    }
}

/// A graded free resolution `0 <- S <- F_1 <- ... <- F_p <- 0` of `S/I`.
#[derive(Clone, Debug)]
pub struct GradedFreeResolution {
    nvars: usize,
    twists: Vec<Vec<u32>>,
    differentials: Vec<PolyMatrix>,
}

impl GradedFreeResolution {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Length `p` of the resolution.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Generator degrees of `F_i`; `F_0 = S` has the single twist 0.
    pub fn twists(&self, i: usize) -> &[u32] {
        self.twists.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twists(i).len()
    }

    /// The differential `d_i: F_i -> F_{i-1}` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> Option<&PolyMatrix> {
        i.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    /// Consecutive differentials compose to zero.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.differentials.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No differential has a nonzero constant entry. The unit ideal is
    /// presented by `d_1 = (1)` and is exempt at that step.
    pub fn is_minimal(&self) -> bool {
        self.differentials
            .iter()
            .skip(1)
            .all(|d| d.first_unit().is_none())
    }

    /// Graded Betti numbers of the ideal: `β_{i,j}` counts degree-`j`
    /// generators of `F_{i+1}`.
    pub fn betti(&self) -> BettiTable {
        let mut counts = BTreeMap::new();
        for (i, tw) in self.twists.iter().enumerate().skip(1) {
            for &t in tw {
                *counts.entry((i - 1, t)).or_insert(0u64) += 1;
            }
        }
        BettiTable::from_counts(counts)
    }
}

fn to_matrix(elems: &[Vector], rows: usize, nvars: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zero(nvars, rows, elems.len());
    for (c, v) in elems.iter().enumerate() {
        let mut per_row: Vec<Vec<(ExponentVector, Rational)>> = vec![Vec::new(); rows];
        for t in v.values() {
            per_row[t.comp].push((t.mono.clone(), t.coef.clone()));
        }
        for (r, terms) in per_row.into_iter().enumerate() {
            if !terms.is_empty() {
                m.entries[r][c] = Polynomial::from_terms(nvars, terms);
            }
        }
    }
    m
}

/// Minimal graded free resolution of `S/I` for a nonzero homogeneous `I`.
pub fn free_resolution(ideal: &Ideal) -> Result<GradedFreeResolution> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.nvars();
    let gb = groebner_basis(ideal)?;
    let mut frame = Frame {
        total: vec![ExponentVector::one(n)],
        rank: vec![0],
    };
    let mut elems: Vec<Vector> = gb
        .elements()
        .iter()
        .map(|g| {
            g.terms()
                .iter()
                .map(|(m, c)| {
                    let key = Key {
                        total: m.clone(),
                        rank: 0,
                    };
                    (
                        key,
                        Term {
                            comp: 0,
                            mono: m.clone(),
                            coef: c.clone(),
                        },
                    )
                })
                .collect()
        })
        .collect();
    sort_elements(&mut elems);

    let mut twists = vec![vec![0u32]];
    let mut maps = Vec::new();
    while !elems.is_empty() {
        let next = frame.next(&elems);
        maps.push(to_matrix(&elems, frame.total.len(), n));
        twists.push(next.total.iter().map(ExponentVector::degree).collect());
        let syz = syzygies(&elems, &next);
        frame = next;
        elems = syz;
    }
    minimize(&mut twists, &mut maps)?;
    Ok(GradedFreeResolution {
        nvars: n,
        twists,
        differentials: maps,
    })
}

/// Splits off trivial summands by degree-0 unit pivots, taking the first
/// unit in row-major order at each step.
fn minimize(twists: &mut Vec<Vec<u32>>, maps: &mut Vec<PolyMatrix>) -> Result<()> {
    for i in 2..=maps.len() {
        while let Some((k, j, u)) = maps[i - 1].first_unit() {
            let d = &maps[i - 1];
            let col: Vec<Polynomial> = (0..d.rows).map(|r| d.entries[r][j].clone()).collect();
            let row: Vec<Polynomial> = d.entries[k].iter().map(|p| p.scale(&u.recip())).collect();
            let d = &mut maps[i - 1];
            for (r, cr) in col.iter().enumerate() {
                if r == k || cr.is_zero() {
                    continue;
                }
                for (c, rc) in row.iter().enumerate() {
                    if c != j && !rc.is_zero() {
                        d.entries[r][c] = d.entries[r][c].try_sub(&cr.try_mul(rc)?)?;
                    }
                }
            }
            d.remove_row(k);
            d.remove_col(j);
            maps[i - 2].remove_col(k);
            if let Some(up) = maps.get_mut(i) {
                up.remove_row(j);
            }
            twists[i - 1].remove(k);
            twists[i].remove(j);
        }
    }
    while twists.len() > 1 && twists.last().is_some_and(Vec::is_empty) {
        twists.pop();
        maps.pop();
    }
    Ok(())
}

/// Graded Betti numbers of `I`, read from its minimal resolution.
pub fn betti_table(ideal: &Ideal) -> Result<BettiTable> {
    Ok(free_resolution(ideal)?.betti())
}
