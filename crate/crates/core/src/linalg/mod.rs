//! Exact sparse linear algebra over ℤ and ℤ/2.

mod gf2;
mod snf;

use std::ops::AddAssign;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use gf2::rank_mod2;
pub use snf::{smith_normal_form, smith_normal_form_dense};

/// Exact integer entry type.
pub trait Scalar: Clone + Zero + One + AddAssign + std::fmt::Debug + Send + Sync {
    fn to_bigint(&self) -> BigInt;
    fn is_odd(&self) -> bool;
}

impl Scalar for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_odd(&self) -> bool {
        self & 1 == 1
    }
}

impl Scalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn is_odd(&self) -> bool {
        Integer::is_odd(self)
    }
}

/// Coordinate-list matrix with no duplicate positions and no zero entries.
/// Entries are kept sorted by (row, column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, T)>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    /// Sums duplicate positions and drops zeros.
    ///
    /// Panics if a position lies outside the matrix.
    pub fn from_triplets(rows: usize, cols: usize, mut triplets: Vec<(usize, usize, T)>) -> Self {
        triplets.sort_by_key(|t| (t.0, t.1));
        let mut entries: Vec<(usize, usize, T)> = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "entry ({r}, {c}) outside {rows}x{cols}"
            );
            match entries.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => entries.push((r, c, v)),
            }
        }
        entries.retain(|e| !e.2.is_zero());
        SparseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_dense(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let triplets = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone())))
            .collect();
        SparseMatrix::from_triplets(rows.len(), cols, triplets)
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, T::one())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, T)] {
        &self.entries
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, c, v) in &self.entries {
            out[*r][*c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let t = self
            .entries
            .iter()
            .map(|(r, c, v)| (*c, *r, v.clone()))
            .collect();
        SparseMatrix::from_triplets(self.cols, self.rows, t)
    }

    pub fn to_bigint(&self) -> SparseMatrix<BigInt> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(r, c, v)| (*r, *c, v.to_bigint()))
                .collect(),
        }
    }

    /// Entries reduced mod 2 (odd entries become 1).
    pub fn mod2(&self) -> SparseMatrix<i64> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .filter(|e| e.2.is_odd())
                .map(|(r, c, _)| (*r, *c, 1))
                .collect(),
        }
    }

    /// Exact product `self * rhs` over ℤ.
    pub fn mul(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<BigInt> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut rhs_rows: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); rhs.rows];
        for (r, c, v) in &rhs.entries {
            rhs_rows[*r].push((*c, v.to_bigint()));
        }
        let mut out = Vec::new();
        for (r, k, v) in &self.entries {
            let v = v.to_bigint();
            for (c, w) in &rhs_rows[*k] {
                out.push((*r, *c, &v * w));
            }
        }
        SparseMatrix::from_triplets(self.rows, rhs.cols, out)
    }
}
