//! Minimal exact linear algebra: dense matrices over a generic ring, with
//! fraction-free (Bareiss) elimination for rank, determinant and null-space
//! computations over an integral domain. No floating point anywhere; entries
//! only ever move inside the ring, so results are exact by construction.

use num_traits::Zero;

use crate::ring::{IntegralDomain, Ring};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<S>>,
}

impl<S: Ring> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![S::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i][i] = S::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<S>>) -> Self {
        let rows = data.len();
        let cols = data.first().map(Vec::len).unwrap_or(0);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix<S> {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Matrix<S> {
        self.map(|v| -v.clone())
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i][j] = out.data[i][j].clone() + other.data[i][j].clone();
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix<S>) -> Matrix<S> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out: Matrix<S> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.data[k][j].is_zero() {
                        continue;
                    }
                    out.data[i][j] = out.data[i][j].clone()
                        + self.data[i][k].clone() * other.data[k][j].clone();
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                let mut acc = S::zero();
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }
}

/// Row echelon form produced by fraction-free elimination.
pub struct Echelon<S> {
    pub matrix: Matrix<S>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Parity of the row swaps performed (+1 or -1).
    pub swap_sign: i8,
}

/// Bareiss single-step fraction-free elimination. Pivots on the first
/// nonzero entry of each column (topmost candidate row), which keeps the
/// procedure deterministic. Every division is exact in the domain.
pub fn row_echelon<S: IntegralDomain>(mut m: Matrix<S>) -> Echelon<S> {
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = S::one();
    let mut rank = 0;
    let mut pivot_cols = Vec::new();
    let mut swap_sign = 1i8;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m.data[r][col].is_zero()) else {
            continue;
        };
        if pivot_row != rank {
            m.data.swap(pivot_row, rank);
            swap_sign = -swap_sign;
        }
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = m.data[rank][col].clone() * m.data[i][j].clone()
                    - m.data[i][col].clone() * m.data[rank][j].clone();
                m.data[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division must be exact over an integral domain");
            }
            m.data[i][col] = S::zero();
        }
        prev = m.data[rank][col].clone();
        pivot_cols.push(col);
        rank += 1;
    }
    Echelon {
        matrix: m,
        rank,
        pivot_cols,
        swap_sign,
    }
}

pub fn rank<S: IntegralDomain>(m: &Matrix<S>) -> usize {
    row_echelon(m.clone()).rank
}

/// Exact determinant of a square matrix (Bareiss: the last pivot of the
/// fraction-free echelon form, corrected by the swap parity).
pub fn determinant<S: IntegralDomain>(m: &Matrix<S>) -> S {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    if m.rows == 0 {
        return S::one();
    }
    let ech = row_echelon(m.clone());
    if ech.rank < m.rows {
        return S::zero();
    }
    let last = ech.matrix.data[m.rows - 1][ech.pivot_cols[m.rows - 1]].clone();
    if ech.swap_sign < 0 {
        -last
    } else {
        last
    }
}

/// Basis of the right null space, one vector per free column, computed by
/// cross-multiplied back substitution so every entry stays in the domain.
/// The basis is deterministic; vectors are not normalized.
pub fn null_space<S: IntegralDomain>(m: &Matrix<S>) -> Vec<Vec<S>> {
    let ech = row_echelon(m.clone());
    let cols = m.cols;
    let pivot_set: std::collections::BTreeSet<usize> = ech.pivot_cols.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![S::zero(); cols];
        v[free] = S::one();
        for i in (0..ech.rank).rev() {
            let p = ech.pivot_cols[i];
            let mut s = S::zero();
            for j in p + 1..cols {
                let a = &ech.matrix.data[i][j];
                if !a.is_zero() && !v[j].is_zero() {
                    s = s + a.clone() * v[j].clone();
                }
            }
            if s.is_zero() {
                continue;
            }
            let pivot = ech.matrix.data[i][p].clone();
            for entry in v.iter_mut() {
                if !entry.is_zero() {
                    *entry = entry.clone() * pivot.clone();
                }
            }
            v[p] = -s;
        }
        basis.push(v);
    }
    basis
}
