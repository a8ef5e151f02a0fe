use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub value: u64,
}

/// Graded Betti numbers `β_{i,j}` of an ideal `I`: `β_{0,j}` counts minimal
/// generators of degree `j`. Entries are sorted by `(i, j)` with no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn from_counts(counts: BTreeMap<(usize, u32), u64>) -> Self {
        let entries = counts
            .into_iter()
            .filter(|&(_, v)| v > 0)
            .map(|((i, j), value)| BettiEntry { i, j, value })
            .collect();
        BettiTable { entries }
    }

    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries
            .binary_search_by_key(&(i, j), |e| (e.i, e.j))
            .map_or(0, |k| self.entries[k].value)
    }

    /// `max { j - i : β_{i,j} != 0 }`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.iter().map(|e| e.j as i64 - e.i as i64).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.i).max()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|e| e.i == i)
            .map(|e| e.value)
            .sum()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.entries.iter().filter(|e| e.i == 0).map(|e| e.j).max()
    }

    /// Entries with internal degree at most `cutoff`.
    pub fn truncated(&self, cutoff: u32) -> BettiTable {
        BettiTable {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|e| e.j <= cutoff)
                .collect(),
        }
    }

    /// Numerator of the Hilbert series of `S/I` predicted by the table:
    /// `1 - Σ_i (-1)^i Σ_j β_{i,j} t^j`, as coefficients of `t^0, t^1, ...`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let top = self.entries.iter().map(|e| e.j as usize).max().unwrap_or(0);
        let mut out = vec![0i64; top + 1];
        out[0] = 1;
        for e in &self.entries {
            let sign = if e.i % 2 == 0 { -1 } else { 1 };
            out[e.j as usize] += sign * e.value as i64;
        }
        super::hilbert::trim(out)
    }
}

/// Rows are indexed by `j - i`, columns by `i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.projective_dimension() else {
            return writeln!(f, "total: 0");
        };
        let lo = self
            .entries
            .iter()
            .map(|e| e.j as i64 - e.i as i64)
            .min()
            .unwrap();
        let hi = self.regularity().unwrap();
        let width = self
            .entries
            .iter()
            .map(|e| e.value.to_string().len())
            .chain((0..=pd).map(|i| self.total(i).to_string().len()))
            .max()
            .unwrap()
            .max(pd.to_string().len())
            + 1;
        let label = (hi.to_string().len() + 1).max(6);
        write!(f, "{:>label$}", "")?;
        for i in 0..=pd {
            write!(f, "{:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for i in 0..=pd {
            write!(f, "{:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for r in lo..=hi {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for i in 0..=pd {
                let j = r + i as i64;
                let v = if j >= 0 { self.get(i, j as u32) } else { 0 };
                if v == 0 {
                    write!(f, "{:>width$}", ".")?;
                } else {
                    write!(f, "{:>width$}", v)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
