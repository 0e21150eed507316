//! Smith normal form over ℤ with arbitrary-precision arithmetic.
//!
//! Unit pivots are eliminated first on the sparse representation, choosing
//! short columns and short rows to limit fill-in; eliminating a ±1 pivot
//! contributes an invariant factor 1 and removes its row and column. The
//! residue, typically small, is diagonalized densely.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Scalar, SparseMatrix};

/// Invariant factors `d₁ | d₂ | … | d_r` (all positive) of `m`.
pub fn smith_normal_form<T: Scalar>(m: &SparseMatrix<T>) -> Vec<BigInt> {
    let mut work = Reducer::new(m);
    let units = work.eliminate_units();
    let residue = work.residue();
    let mut factors = vec![BigInt::one(); units];
    factors.extend(smith_normal_form_dense(residue));
    factors
}

struct Reducer {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl Reducer {
    fn new<T: Scalar>(m: &SparseMatrix<T>) -> Self {
        let mut rows = vec![BTreeMap::new(); m.rows()];
        let mut cols = vec![BTreeSet::new(); m.cols()];
        for (r, c, v) in m.entries() {
            rows[*r].insert(*c, v.to_bigint());
            cols[*c].insert(*r);
        }
        Reducer { rows, cols }
    }

    fn eliminate_units(&mut self) -> usize {
        let mut count = 0;
        loop {
            let mut order: Vec<usize> = (0..self.cols.len())
                .filter(|&c| !self.cols[c].is_empty())
                .collect();
            order.sort_by_key(|&c| (self.cols[c].len(), c));
            let mut progressed = false;
            for c in order {
                let pivot_row = self.cols[c]
                    .iter()
                    .copied()
                    .filter(|&r| self.rows[r][&c].abs().is_one())
                    .min_by_key(|&r| (self.rows[r].len(), r));
                if let Some(r) = pivot_row {
                    self.pivot(r, c);
                    count += 1;
                    progressed = true;
                }
            }
            if !progressed {
                return count;
            }
        }
    }

    /// Clears column `c` with the unit at `(r, c)`, then drops row `r` and
    /// column `c`. Column operations would clear the rest of row `r` without
    /// touching any other row, so the row is simply discarded.
    fn pivot(&mut self, r: usize, c: usize) {
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let p = pivot_row[&c].clone();
        for &c2 in pivot_row.keys() {
            self.cols[c2].remove(&r);
        }
        let targets: Vec<usize> = std::mem::take(&mut self.cols[c]).into_iter().collect();
        for r2 in targets {
            let f = &self.rows[r2][&c] * &p;
            for (c2, v) in &pivot_row {
                let entry = self.rows[r2].entry(*c2).or_insert_with(BigInt::zero);
                *entry -= &f * v;
                if entry.is_zero() {
                    self.rows[r2].remove(c2);
                    self.cols[*c2].remove(&r2);
                } else {
                    self.cols[*c2].insert(r2);
                }
            }
            debug_assert!(!self.rows[r2].contains_key(&c));
        }
    }

    fn residue(self) -> Vec<Vec<BigInt>> {
        let live_cols: Vec<usize> = (0..self.cols.len())
            .filter(|&c| !self.cols[c].is_empty())
            .collect();
        let index: BTreeMap<usize, usize> =
            live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        self.rows
            .into_iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let mut dense = vec![BigInt::zero(); live_cols.len()];
                for (c, v) in r {
                    dense[index[&c]] = v;
                }
                dense
            })
            .collect()
    }
}

/// Invariant factors of a dense integer matrix (rows of equal length).
pub fn smith_normal_form_dense(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((i, j)) = min_abs(&a, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        a.swap(t, i);
        swap_cols(&mut a, t, j);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    sub_row(&mut a, i, t, &q);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    sub_col(&mut a, j, t, &q);
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                let cross = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                let (i, j) = min_abs(&a, cross).expect("pivot is nonzero");
                a.swap(t, i);
                swap_cols(&mut a, t, j);
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_abs(
    a: &[Vec<BigInt>],
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    cells
        .filter(|&(i, j)| !a[i][j].is_zero())
        .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// row_i -= q * row_t
fn sub_row(a: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
    let src = a[t].clone();
    for (x, y) in a[i].iter_mut().zip(src.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// col_j -= q * col_t
fn sub_col(a: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[t].is_zero() {
            let d = q * &row[t];
            row[j] -= d;
        }
    }
}
