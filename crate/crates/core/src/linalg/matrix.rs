//! Dense real square matrices, row-major, sized for desk-scale spectra.
//!
//! This is deliberately a small fixed-purpose type, not a general linear
//! algebra layer: everything downstream consumes square symmetric matrices of
//! a few hundred rows at most.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

/// Dense n×n real matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    n: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    /// The n×n zero matrix.
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![F::zero(); n * n],
        }
    }

    /// The n×n identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds an n×n matrix from an entry function `(row, col) -> value`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    /// Number of rows (= columns).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix–vector product `A x`.
    pub fn matvec(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.n, "matvec length mismatch");
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            out.push(row.iter().zip(x).map(|(&a, &b)| a * b).sum());
        }
        out
    }

    /// Copy of column `j`.
    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> F {
        self.data
            .iter()
            .fold(F::zero(), |acc, &v| acc.max(v.abs()))
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> F {
        self.data
            .iter()
            .map(|&v| v * v)
            .sum::<F>()
            .sqrt()
    }

    /// Largest `|a_ij − a_ji|` over all pairs; zero means exactly symmetric.
    pub fn max_asymmetry(&self) -> F {
        let mut worst = F::zero();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    /// Position of the first non-finite entry, if any.
    pub fn first_non_finite(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self[(i, j)].is_finite() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `c · A`.
    pub fn scaled(&self, c: F) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|&v| v * c).collect(),
        }
    }

    /// `A + B`. Panics on dimension mismatch (caller invariant).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "add dimension mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// `A − B`. Panics on dimension mismatch (caller invariant).
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "sub dimension mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// `A · B`. Panics on dimension mismatch (caller invariant).
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matmul dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik == F::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.n, |i, j| self[(j, i)])
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> F {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.n + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.n + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, " ")?;
            for j in 0..self.n {
                write!(f, " {:>10.4?}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
