//! Monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::ExponentVector;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// The first `k` variables (after permutation) form a block that dominates
    /// the rest; grevlex inside each block.
    Elimination(usize),
}

/// A monomial order, optionally acting on permuted variables.
///
/// `perm[p]` is the variable that sits in position `p` of the order, so with
/// the identity permutation `x0` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub perm: Option<Vec<usize>>,
}

impl TermOrder {
    pub const fn lex() -> Self {
        TermOrder {
            kind: OrderKind::Lex,
            perm: None,
        }
    }

    pub const fn grevlex() -> Self {
        TermOrder {
            kind: OrderKind::Grevlex,
            perm: None,
        }
    }

    /// Block order eliminating `vars` (any subset): they are moved to the front.
    pub fn eliminating(nvars: usize, vars: &[usize]) -> Self {
        let mut perm: Vec<usize> = vars.to_vec();
        perm.sort_unstable();
        perm.dedup();
        let k = perm.len();
        perm.extend((0..nvars).filter(|v| !vars.contains(v)));
        TermOrder {
            kind: OrderKind::Elimination(k),
            perm: Some(perm),
        }
    }

    #[inline]
    fn var_at(&self, pos: usize) -> usize {
        match &self.perm {
            Some(p) => p[pos],
            None => pos,
        }
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let (a, b) = (a.as_slice(), b.as_slice());
        let n = a.len();
        match self.kind {
            OrderKind::Lex => {
                for p in 0..n {
                    let v = self.var_at(p);
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => self.grevlex_block(a, b, 0, n),
            OrderKind::Elimination(k) => {
                let k = k.min(n);
                match self.grevlex_block(a, b, 0, k) {
                    Ordering::Equal => self.grevlex_block(a, b, k, n),
                    o => o,
                }
            }
        }
    }

    fn grevlex_block(&self, a: &[u32], b: &[u32], lo: usize, hi: usize) -> Ordering {
        let (mut da, mut db) = (0u64, 0u64);
        for p in lo..hi {
            let v = self.var_at(p);
            da += a[v] as u64;
            db += b[v] as u64;
        }
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for p in (lo..hi).rev() {
            let v = self.var_at(p);
            if a[v] != b[v] {
                return b[v].cmp(&a[v]);
            }
        }
        Ordering::Equal
    }

    /// Checked comparison for inputs of possibly different lengths.
    pub fn try_compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::VariableCountMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        if let Some(p) = &self.perm {
            if p.len() != a.len() {
                return Err(Error::VariableCountMismatch {
                    left: p.len(),
                    right: a.len(),
                });
            }
        }
        Ok(self.compare(a, b))
    }
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::grevlex()
    }
}
