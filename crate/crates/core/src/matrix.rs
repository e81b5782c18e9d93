//! Small dense integer matrices.
//!
//! Ranks never exceed 8, so a row-major `Vec<i64>` is plenty; entries of Weyl
//! action matrices stay far below any overflow threshold.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl SquareMatrix {
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| i64::from(i == j))
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.dim + col] = value;
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        let n = self.dim;
        SquareMatrix::from_fn(n, |i, j| (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum())
    }

    /// Matrix-vector product, treating `v` as a column vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.dim, "vector length differs from dimension");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Column `col` as a vector (the image of the `col`-th basis vector).
    pub fn column(&self, col: usize) -> Vec<i64> {
        (0..self.dim).map(|i| self.get(i, col)).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == i64::from(i == j)))
    }

    pub fn transpose(&self) -> SquareMatrix {
        SquareMatrix::from_fn(self.dim, |i, j| self.get(j, i))
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
