//! Dense row-major rational matrices and exact Gaussian elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>, // entry (r, c) at r * cols + c
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.row_vecs().iter().map(|row| {
                row.iter().map(rational::to_text).collect::<Vec<_>>()
            }))
            .finish()
    }
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: RatMatrix,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    /// Builds a matrix from row-major entries; `None` if the length is not `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Option<Self> {
        (entries.len() == rows * cols).then_some(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| rational::ints(r)).collect())
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows).map(|r| rational::dot(self.row(r), v)).collect()
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact nilpotency test: `N^n = 0` for an `n × n` matrix.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).is_zero()
    }

    /// Block-diagonal sum of square blocks.
    pub fn direct_sum(blocks: &[RatMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            assert!(b.is_square());
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(off + r, off + c)] = b[(r, c)].clone();
                }
            }
            off += b.rows;
        }
        out
    }

    /// Stacks matrices with a common column count on top of each other.
    pub fn vstack(parts: &[RatMatrix]) -> Self {
        let cols = parts.first().map_or(0, |p| p.cols);
        assert!(parts.iter().all(|p| p.cols == cols));
        Self {
            rows: parts.iter().map(|p| p.rows).sum(),
            cols,
            entries: parts.iter().flat_map(|p| p.entries.iter().cloned()).collect(),
        }
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m[(rank, col)].recip();
            for c in col..m.cols {
                let v = &m[(rank, c)] * &inv;
                m[(rank, c)] = v;
            }
            for r in 0..m.rows {
                if r == rank || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(rank, c)].is_zero() {
                        continue;
                    }
                    let v = &m[(rank, c)] * &factor;
                    m[(r, c)] -= v;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix: m, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(row, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self·x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let Rref { matrix: m, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = m[(row, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

/// Row-reduced basis of the span of `vectors` (all of length `dim`).
pub fn span_basis(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_rows(vectors.to_vec());
    debug_assert_eq!(m.cols(), dim);
    let r = m.rref();
    (0..r.rank()).map(|i| r.matrix.row(i).to_vec()).collect()
}

/// Dimension of the span of `vectors`.
pub fn span_rank(vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        0
    } else {
        RatMatrix::from_rows(vectors.to_vec()).rank()
    }
}

/// Exact kernel basis of `m`.
pub fn rref_kernel(m: &RatMatrix) -> Vec<Vec<Rational>> {
    m.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(rref_kernel(&RatMatrix::identity(2)).is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = rref_kernel(&RatMatrix::zeros(2, 3));
        assert_eq!(k.len(), 3);
        assert_eq!(span_rank(&k), 3);
    }

    #[test]
    fn kernel_rank_two_in_dim_three() {
        let m = RatMatrix::from_int_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = rref_kernel(&m);
        assert_eq!(k, vec![vec![int(-1), int(1), int(0)]]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = RatMatrix::from_int_rows(&[&[2, 0], &[0, 0]]);
        assert_eq!(m.solve(&[int(1), int(0)]), Some(vec![frac(1, 2), int(0)]));
        assert_eq!(m.solve(&[int(1), int(1)]), None);
    }

    #[test]
    fn nilpotency() {
        let e = RatMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(e.is_nilpotent());
        let j = RatMatrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        assert!(!j.is_nilpotent());
    }

    fn arb_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |vals| {
                RatMatrix::from_entries(r, c, vals.into_iter().map(int).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated_and_complete(m in arb_matrix()) {
            let k = rref_kernel(&m);
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            prop_assert_eq!(span_rank(&k), k.len());
            prop_assert_eq!(k.len() + m.rank(), m.cols());
        }
    }
}
