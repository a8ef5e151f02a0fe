//! Rank of sparse matrices over the rationals.

use num_traits::Zero;

use crate::algebra::Rational;

pub(crate) type SparseRow = Vec<(usize, Rational)>;

fn sub_scaled(a: &SparseRow, c: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of the matrix whose rows are given sparsely, each sorted by column.
pub(crate) fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut pivots: std::collections::HashMap<usize, SparseRow> = Default::default();
    for mut row in rows {
        while let Some((col, c)) = row.first().cloned() {
            match pivots.get(&col) {
                Some(p) => {
                    let f = c / &p[0].1;
                    row = sub_scaled(&row, &f, p);
                }
                None => {
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}
