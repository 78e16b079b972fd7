//! Dense complex matrices for the unitary-conversion verifiers.
//!
//! The conversion theorems work with diagonal unitaries, Fourier matrices,
//! and pinched products, so only a small operation set is needed: multiply,
//! adjoint, scaling, sums, and max-entry norms. Row-major storage mirrors
//! [`super::matrix::Matrix`].

use num_complex::Complex;

use crate::scalar::Scalar;

use super::eigen::LinalgError;
use super::matrix::Matrix;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<F> {
    n: usize,
    data: Vec<Complex<F>>,
}

impl<F: Scalar> CMatrix<F> {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex::new(F::zero(), F::zero()); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::new(F::one(), F::zero());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<F>) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Diagonal matrix from its diagonal entries.
    pub fn diag_from(diag: &[Complex<F>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Embeds a real matrix with zero imaginary parts.
    pub fn from_real(a: &Matrix<F>) -> Self {
        Self::from_fn(a.n(), |i, j| Complex::new(a[(i, j)], F::zero()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiply(&self, rhs: &CMatrix<F>) -> Result<CMatrix<F>, LinalgError> {
        if self.n != rhs.n {
            return Err(LinalgError::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a_ik = self[(i, k)];
                if a_ik.re == F::zero() && a_ik.im == F::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a_ik * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose A†.
    pub fn adjoint(&self) -> CMatrix<F> {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn add(&self, rhs: &CMatrix<F>) -> Result<CMatrix<F>, LinalgError> {
        if self.n != rhs.n {
            return Err(LinalgError::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(Self::from_fn(self.n, |i, j| self[(i, j)] + rhs[(i, j)]))
    }

    pub fn sub(&self, rhs: &CMatrix<F>) -> Result<CMatrix<F>, LinalgError> {
        if self.n != rhs.n {
            return Err(LinalgError::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(Self::from_fn(self.n, |i, j| self[(i, j)] - rhs[(i, j)]))
    }

    pub fn scaled(&self, factor: Complex<F>) -> CMatrix<F> {
        Self::from_fn(self.n, |i, j| self[(i, j)] * factor)
    }

    /// Largest entry modulus, max_{ij} |a_ij|.
    pub fn max_abs_norm(&self) -> F {
        self.data
            .iter()
            .map(|z| z.norm())
            .fold(F::zero(), |acc, x| if x > acc { x } else { acc })
    }

    pub fn trace(&self) -> Complex<F> {
        (0..self.n).map(|i| self[(i, i)]).fold(
            Complex::new(F::zero(), F::zero()),
            |acc, z| acc + z,
        )
    }
}

impl<F> std::ops::Index<(usize, usize)> for CMatrix<F> {
    type Output = Complex<F>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<F> {
        &self.data[i * self.n + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for CMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<F> {
        let n = self.n;
        &mut self.data[i * n + j]
    }
}
