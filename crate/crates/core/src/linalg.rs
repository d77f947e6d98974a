//! Dense matrices over an exact field, with the elimination kernels the rest
//! of the crate is built on.
//!
//! Elimination always takes the first nonzero entry of the current column
//! (scanning rows top to bottom) as the pivot, so echelon forms and the bases
//! derived from them are reproducible.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{dot, mul, Scalar};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    /// Square diagonal matrix with the given diagonal.
    pub fn diag(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-literal constructor, mostly for fixtures and tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
            .collect();
        Self::from_rows(rows).expect("integer literal rows must have equal length")
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn column_vector(v: Vec<T>) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].clone() + mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector size mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| mul(v, c)).collect(),
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = T::one() / m.get(row, col).clone();
            for j in col..m.cols {
                let v = mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let factor = m.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m.get(i, j).clone() - mul(&factor, m.get(row, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : M x = 0}`.
    ///
    /// The basis is returned in reduced echelon form: stacked as rows it is a
    /// reduced row echelon matrix, so two equal kernels give equal bases.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let raw: Vec<Vec<T>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect();
        row_space_basis(self.cols, &raw)
    }

    /// Bareiss fraction-free determinant.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m.get(i, k).is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                m.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (mul(m.get(k, k), m.get(i, j)) - mul(m.get(i, k), m.get(k, j))) / prev.clone();
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        Ok(if n == 0 {
            T::one()
        } else {
            sign * m.get(n - 1, n - 1).clone()
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Exact inverse by Gauss-Jordan on `[M | I]`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::block_compose(&[vec![self.clone(), Self::identity(n)]])?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Assemble a block matrix from a grid of blocks given row by row.
    ///
    /// Blocks in one grid row must agree on their row count and blocks in one
    /// grid column on their column count. Zero-sized blocks are allowed, which
    /// is how empty borders (for example `k = 0` augmentations) are expressed.
    pub fn block_compose(grid: &[Vec<Self>]) -> Result<Self> {
        let Some(first) = grid.first() else {
            return Ok(Self::zeros(0, 0));
        };
        let width = first.len();
        if grid.iter().any(|r| r.len() != width) {
            return Err(Error::DimensionMismatch(
                "block grid rows have different lengths".into(),
            ));
        }
        let col_sizes: Vec<usize> = first.iter().map(Self::cols).collect();
        let mut row_sizes = Vec::with_capacity(grid.len());
        for (bi, brow) in grid.iter().enumerate() {
            let h = brow.first().map_or(0, Self::rows);
            for (bj, b) in brow.iter().enumerate() {
                if b.rows != h || b.cols != col_sizes[bj] {
                    return Err(Error::DimensionMismatch(format!(
                        "block ({bi},{bj}) is {}x{}, expected {h}x{}",
                        b.rows, b.cols, col_sizes[bj]
                    )));
                }
            }
            row_sizes.push(h);
        }
        let total_rows: usize = row_sizes.iter().sum();
        let total_cols: usize = col_sizes.iter().sum();
        let mut out = Self::zeros(total_rows, total_cols);
        let mut r0 = 0;
        for (brow, &h) in grid.iter().zip(&row_sizes) {
            let mut c0 = 0;
            for (b, &w) in brow.iter().zip(&col_sizes) {
                for i in 0..h {
                    for j in 0..w {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += w;
            }
            r0 += h;
        }
        Ok(out)
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        Self::block_compose(&[
            vec![a.clone(), Self::zeros(a.rows, b.cols)],
            vec![Self::zeros(b.rows, a.cols), b.clone()],
        ])
        .expect("block diagonal shapes are always consistent")
    }

    /// The permutation matrix `E_pi = (delta_{i, pi(i)})` for a permutation of
    /// `1..=n` given in one-line notation.
    pub fn permutation_matrix(pi: &[usize]) -> Result<Self> {
        let n = pi.len();
        let mut seen = vec![false; n];
        for &p in pi {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::NotAPermutation(n));
            }
            seen[p - 1] = true;
        }
        let mut m = Self::zeros(n, n);
        for (i, &p) in pi.iter().enumerate() {
            m.set(i, p - 1, T::one());
        }
        Ok(m)
    }
}

/// Reduced echelon basis of the span of `vectors` (each of length `dim`).
pub fn row_space_basis<T: Scalar>(dim: usize, vectors: &[Vec<T>]) -> Vec<Vec<T>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
    debug_assert_eq!(m.cols(), dim);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
