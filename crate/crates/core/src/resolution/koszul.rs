//! Betti numbers as Koszul homology of `S/I`, computed by linear algebra
//! on graded (or, for monomial ideals, multigraded) pieces.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::linalg::{rank, SparseRow};
use super::BettiTable;
use crate::algebra::monomial::{minimalize, monomials_of_degree, ExponentVector};
use crate::algebra::{Ideal, Rational};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GroebnerBasis};

/// Smallest accepted cutoff: the largest generator degree plus the number
/// of variables.
pub fn minimum_koszul_cutoff(ideal: &Ideal) -> u32 {
    let top = ideal
        .generators()
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(0);
    top + ideal.nvars() as u32
}

/// Betti numbers `β_{i,j}(I)` for `j <= cutoff` via
/// `β_{i,j}(I) = dim H_{i+1}(K(x) ⊗ S/I)_j`.
pub fn betti_via_koszul(ideal: &Ideal, cutoff: u32) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let minimum = minimum_koszul_cutoff(ideal);
    if cutoff < minimum {
        return Err(Error::CutoffTooSmall { cutoff, minimum });
    }
    let gb = groebner_basis(ideal)?;
    if gb.is_unit() {
        return Ok(BettiTable::from_counts(BTreeMap::from([((0, 0), 1)])));
    }
    let quotient = if ideal.is_monomial() {
        multigraded(ideal.nvars(), &minimalize(gb.leading_monomials()), cutoff)
    } else {
        graded(ideal.nvars(), &gb, cutoff)?
    };
    let counts = quotient
        .into_iter()
        .filter(|&((i, _), _)| i >= 1)
        .map(|((i, j), v)| ((i - 1, j), v))
        .collect();
    Ok(BettiTable::from_counts(counts))
}

/// Subsets of `0..n` of size `k`, as sorted index lists.
fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..pool.len() {
            cur.push(pool[s]);
            go(pool, k, s + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, k, 0, &mut Vec::new(), &mut out);
    out
}

fn sign(t: usize) -> Rational {
    if t.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Betti numbers of `S/M` for a monomial ideal, one multidegree at a time.
/// Only multidegrees below the lcm of the generators can contribute.
fn multigraded(n: usize, gens: &[ExponentVector], cutoff: u32) -> BTreeMap<(usize, u32), u64> {
    let in_ideal = |m: &ExponentVector| gens.iter().any(|g| g.divides(m));
    let top = gens
        .iter()
        .fold(ExponentVector::one(n), |acc, g| acc.lcm(g));
    let mut out = BTreeMap::new();
    let mut b = vec![0u32; n];
    loop {
        let deg: u32 = b.iter().sum();
        if deg <= cutoff {
            let support: Vec<usize> = (0..n).filter(|&v| b[v] > 0).collect();
            // basis of C_i in multidegree b: subsets σ with x^{b-σ} standard
            let basis: Vec<Vec<Vec<usize>>> = (0..=support.len())
                .map(|i| {
                    subsets(&support, i)
                        .into_iter()
                        .filter(|s| {
                            let mut e = b.clone();
                            for &v in s {
                                e[v] -= 1;
                            }
                            !in_ideal(&ExponentVector::new(e))
                        })
                        .collect()
                })
                .collect();
            let ranks: Vec<usize> = (0..=support.len())
                .map(|i| {
                    if i == 0 {
                        return 0;
                    }
                    let index: HashMap<&Vec<usize>, usize> = basis[i - 1]
                        .iter()
                        .enumerate()
                        .map(|(k, s)| (s, k))
                        .collect();
                    rank(basis[i].iter().map(|s| {
                        let mut row: SparseRow = (0..s.len())
                            .filter_map(|t| {
                                let mut face = s.clone();
                                face.remove(t);
                                index.get(&face).map(|&k| (k, sign(t)))
                            })
                            .collect();
                        row.sort_by_key(|e| e.0);
                        row
                    }))
                })
                .collect();
            for i in 0..=support.len() {
                let next = ranks.get(i + 1).copied().unwrap_or(0);
                let h = basis[i].len() - ranks[i] - next;
                if h > 0 {
                    *out.entry((i, deg)).or_insert(0) += h as u64;
                }
            }
        }
        // next multidegree in the box
        let mut v = 0;
        loop {
            if v == n {
                return out;
            }
            if b[v] < top.get(v) {
                b[v] += 1;
                break;
            }
            b[v] = 0;
            v += 1;
        }
    }
}

/// Standard monomials of each degree and multiplication-by-variable maps.
struct Quotient<'a> {
    n: usize,
    gb: &'a GroebnerBasis,
    leads: Vec<ExponentVector>,
    standard: Vec<Vec<ExponentVector>>,
    index: Vec<HashMap<ExponentVector, usize>>,
}

impl<'a> Quotient<'a> {
    fn new(n: usize, gb: &'a GroebnerBasis, top: u32) -> Self {
        let leads = gb.leading_monomials();
        let mut q = Quotient {
            n,
            gb,
            leads,
            standard: Vec::new(),
            index: Vec::new(),
        };
        for d in 0..=top {
            let mons: Vec<ExponentVector> = monomials_of_degree(n, d)
                .into_iter()
                .filter(|m| !q.leads.iter().any(|l| l.divides(m)))
                .collect();
            q.index.push(
                mons.iter()
                    .cloned()
                    .enumerate()
                    .map(|(k, m)| (m, k))
                    .collect(),
            );
            q.standard.push(mons);
        }
        q
    }

    /// `x_v * m` in the standard basis of degree `deg(m) + 1`.
    fn times(&self, v: usize, m: &ExponentVector) -> Result<SparseRow> {
        let prod = m.mul(&ExponentVector::variable(self.n, v));
        let d = prod.degree() as usize;
        if let Some(&k) = self.index[d].get(&prod) {
            return Ok(vec![(k, Rational::one())]);
        }
        let nf = self
            .gb
            .normal_form(&crate::algebra::Polynomial::monomial(prod))?;
        let mut row: SparseRow = nf
            .terms()
            .iter()
            .map(|(e, c)| (self.index[d][e], c.clone()))
            .collect();
        row.sort_by_key(|e| e.0);
        Ok(row)
    }
}

fn graded(n: usize, gb: &GroebnerBasis, cutoff: u32) -> Result<BTreeMap<(usize, u32), u64>> {
    let q = Quotient::new(n, gb, cutoff);
    let all: Vec<usize> = (0..n).collect();
    let wedges: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| subsets(&all, i)).collect();
    let wedge_index: Vec<HashMap<&Vec<usize>, usize>> = wedges
        .iter()
        .map(|w| w.iter().enumerate().map(|(k, s)| (s, k)).collect())
        .collect();
    let mut out = BTreeMap::new();
    for j in 0..=cutoff {
        // C_i in degree j: Λ^i ⊗ (S/I)_{j-i}, indexed by (wedge, standard)
        let dims: Vec<usize> = (0..=n)
            .map(|i| {
                if i as u32 > j {
                    0
                } else {
                    wedges[i].len() * q.standard[(j - i as u32) as usize].len()
                }
            })
            .collect();
        let mut ranks = vec![0usize; n + 2];
        for i in 1..=n {
            if dims[i] == 0 || dims[i - 1] == 0 {
                continue;
            }
            let d_src = (j - i as u32) as usize;
            let width = q.standard[d_src + 1].len();
            let mut rows = Vec::with_capacity(dims[i]);
            for s in &wedges[i] {
                for m in &q.standard[d_src] {
                    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                    for t in 0..s.len() {
                        let mut face = s.clone();
                        let v = face.remove(t);
                        let base = wedge_index[i - 1][&face] * width;
                        for (k, c) in q.times(v, m)? {
                            let e = acc.entry(base + k).or_insert_with(Rational::zero);
                            *e += sign(t) * c;
                        }
                    }
                    rows.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
                }
            }
            ranks[i] = rank(rows);
        }
        for i in 0..=n {
            let h = dims[i] - ranks[i] - ranks[i + 1];
            if h > 0 {
                out.insert((i, j), h as u64);
            }
        }
    }
    Ok(out)
}
