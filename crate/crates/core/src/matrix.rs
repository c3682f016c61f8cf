//! Dense square matrices over non-negative integers.

use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::{Result, ShiftError};

/// A square matrix of non-negative counts. Adjacency matrices are the special
/// case where every entry is 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        Matrix {
            n,
            data: vec![1; n * n],
        }
    }

    /// Builds a matrix from rows; every row must have the same length as the
    /// number of rows.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(ShiftError::spec(format!(
                    "matrix row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { n, data })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.n + j] = value;
    }

    #[inline]
    pub fn nonzero(&self, i: usize, j: usize) -> bool {
        self.get(i, j) != 0
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&x| x <= 1)
    }

    /// Same positions of nonzero entries.
    pub fn same_zero_pattern(&self, other: &Matrix) -> bool {
        self.n == other.n
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| (*a == 0) == (*b == 0))
    }

    /// Every nonzero entry of `self` is nonzero in `other`.
    pub fn support_within(&self, other: &Matrix) -> bool {
        self.n == other.n
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| *a == 0 || *b != 0)
    }

    /// Principal submatrix on the given indices, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(&[vec![1, 0], vec![1]]).is_err());
        assert!(Matrix::from_rows(&[vec![1, 0, 0], vec![1, 0, 0]]).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let h = Matrix::from_rows(&[[1, 1], [1, 0]]).unwrap();
        assert_eq!(h.mul(&h).rows(), vec![vec![2, 1], vec![1, 1]]);
        let a = Matrix::from_rows(&[[0, 1], [0, 0]]).unwrap();
        assert_eq!(a.transpose().rows(), vec![vec![0, 0], vec![1, 0]]);
    }
}
