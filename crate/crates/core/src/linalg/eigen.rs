//! Symmetric eigendecomposition by cyclic Jacobi rotations, and the spectral
//! quantities derived from it (inertia, S⁺/S⁻ sums).
//!
//! Jacobi is the right tool at desk scale: simple, numerically robust, and it
//! produces an orthonormal eigenvector matrix as a by-product of the
//! rotations. Each sweep visits every strict upper-triangle position once in
//! row-major order and applies a two-sided rotation that zeroes that entry;
//! the off-diagonal Frobenius norm decreases monotonically and the iteration
//! stops when it falls below `jacobi_conv_factor · ‖A‖_F`.

use std::cmp::Ordering;

use thiserror::Error;

use crate::config::Tolerances;
use crate::scalar::Scalar;

use super::matrix::Matrix;

/// Errors from the linear-algebra layer. Magnitudes are reported as `f64`
/// regardless of the working scalar so error types stay non-generic.
#[derive(Debug, Error)]
pub enum LinalgError {
    #[error(
        "matrix is not symmetric: max |a_ij - a_ji| = {max_asymmetry:.3e} exceeds {tol:.3e}"
    )]
    NotSymmetric { max_asymmetry: f64, tol: f64 },
    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error(
        "Jacobi iteration hit the {sweeps}-sweep cap: off-diagonal norm {off_norm:.3e} above target {target:.3e}"
    )]
    NoConvergence {
        sweeps: usize,
        off_norm: f64,
        target: f64,
    },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// Counts of positive, negative, and zero eigenvalues (π, ν, δ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// S⁺ = Σ μᵢ² over positive eigenvalues, S⁻ = Σ μᵢ² over negative ones, and
/// T = Σ μᵢ over positive ones (half the energy, since Σ|μᵢ| = 2T when the
/// trace vanishes).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralSums<F> {
    pub s_plus: F,
    pub s_minus: F,
    pub energy_half: F,
}

/// Eigendecomposition of a real symmetric matrix.
///
/// `values` are sorted non-increasingly; column i of `vectors` is the
/// eigenvector for `values[i]`. Equal values keep the solver's output order.
/// `zero_tol` is the sign-classification threshold frozen at decomposition
/// time (`zero_tol_factor · n · max|a_kℓ|`).
#[derive(Clone)]
pub struct Spectrum<F> {
    values: Vec<F>,
    vectors: Matrix<F>,
    zero_tol: F,
}

impl<F: Scalar> std::fmt::Debug for Spectrum<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Spectrum")
            .field("values", &self.values)
            .field("zero_tol", &self.zero_tol)
            .finish_non_exhaustive()
    }
}

impl<F: Scalar> Spectrum<F> {
    /// Eigenvalues, non-increasing.
    pub fn values(&self) -> &[F] {
        &self.values
    }

    /// Orthonormal eigenvector matrix; column i pairs with `values()[i]`.
    pub fn vectors(&self) -> &Matrix<F> {
        &self.vectors
    }

    /// Sign-classification threshold used by [`Spectrum::inertia`].
    pub fn zero_tol(&self) -> F {
        self.zero_tol
    }

    /// Largest eigenvalue μ₁. Panics on an empty (0×0) spectrum.
    pub fn mu_max(&self) -> F {
        self.values[0]
    }

    /// Smallest eigenvalue μ_n. Panics on an empty (0×0) spectrum.
    pub fn mu_min(&self) -> F {
        *self.values.last().expect("non-empty spectrum")
    }

    /// Classifies eigenvalue signs against `zero_tol`: μ > zero_tol counts
    /// positive, μ < −zero_tol negative, the rest zero.
    pub fn inertia(&self) -> Inertia {
        let mut inertia = Inertia {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        for &mu in &self.values {
            if mu > self.zero_tol {
                inertia.positive += 1;
            } else if mu < -self.zero_tol {
                inertia.negative += 1;
            } else {
                inertia.zero += 1;
            }
        }
        inertia
    }

    /// S⁺, S⁻, and T over the sign classes given by `inertia`.
    ///
    /// For an adjacency matrix, S⁺ + S⁻ = Σμᵢ² = 2m.
    pub fn spectral_sums(&self, inertia: &Inertia) -> SpectralSums<F> {
        let positive = &self.values[..inertia.positive];
        let negative = &self.values[self.values.len() - inertia.negative..];
        SpectralSums {
            s_plus: positive.iter().map(|&mu| mu * mu).sum(),
            s_minus: negative.iter().map(|&mu| mu * mu).sum(),
            energy_half: positive.iter().copied().sum(),
        }
    }
}

/// Square root of the sum of squared off-diagonal entries.
fn off_diagonal_norm<F: Scalar>(a: &Matrix<F>) -> F {
    let n = a.n();
    let mut sum = F::zero();
    for i in 0..n {
        for j in (i + 1)..n {
            let two = F::cast(2.0);
            sum += two * a[(i, j)] * a[(i, j)];
        }
    }
    sum.sqrt()
}

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
///
/// The input must be symmetric within `asymmetry_rel_tol · max|a_kℓ|` and
/// finite. Convergence is declared when the off-diagonal Frobenius norm drops
/// below `jacobi_conv_factor · ‖A‖_F`; if that has not happened after
/// `jacobi_max_sweeps` sweeps the achieved norm is reported as an error.
pub fn eig_symmetric<F: Scalar>(
    a: &Matrix<F>,
    tol: &Tolerances<F>,
) -> Result<Spectrum<F>, LinalgError> {
    let n = a.n();
    if let Some((row, col)) = a.first_non_finite() {
        return Err(LinalgError::NonFinite { row, col });
    }
    let max_abs = a.max_abs();
    let asym = a.max_asymmetry();
    let asym_tol = tol.asymmetry_rel_tol * max_abs;
    if asym > asym_tol {
        return Err(LinalgError::NotSymmetric {
            max_asymmetry: asym.to_f64().unwrap_or(f64::NAN),
            tol: asym_tol.to_f64().unwrap_or(f64::NAN),
        });
    }

    let mut m = a.clone();
    let mut vectors = Matrix::identity(n);
    let target = tol.jacobi_conv_factor * a.frobenius_norm();
    // Entries individually below target/n² contribute at most `target` to the
    // total off-diagonal norm, so skipping them cannot stall convergence.
    let skip = if n > 0 {
        target / F::cast_usize(n * n)
    } else {
        F::zero()
    };

    if n > 1 {
        let mut converged = false;
        for _sweep in 0..tol.jacobi_max_sweeps {
            if off_diagonal_norm(&m) <= target {
                converged = true;
                break;
            }
            for p in 0..n - 1 {
                for q in (p + 1)..n {
                    let apq = m[(p, q)];
                    if apq.abs() <= skip {
                        continue;
                    }
                    rotate(&mut m, &mut vectors, p, q, apq);
                }
            }
        }
        if !converged && off_diagonal_norm(&m) > target {
            return Err(LinalgError::NoConvergence {
                sweeps: tol.jacobi_max_sweeps,
                off_norm: off_diagonal_norm(&m).to_f64().unwrap_or(f64::NAN),
                target: target.to_f64().unwrap_or(f64::NAN),
            });
        }
    }

    // Sort descending; stable sort keeps solver order for exact ties.
    let diag: Vec<F> = (0..n).map(|i| m[(i, i)]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap_or(Ordering::Equal));

    let values: Vec<F> = order.iter().map(|&i| diag[i]).collect();
    let sorted_vectors = Matrix::from_fn(n, |r, c| vectors[(r, order[c])]);

    Ok(Spectrum {
        values,
        vectors: sorted_vectors,
        zero_tol: tol.zero_tol(n, max_abs),
    })
}

/// One Jacobi rotation zeroing the (p, q) entry, accumulated into `v`.
fn rotate<F: Scalar>(m: &mut Matrix<F>, v: &mut Matrix<F>, p: usize, q: usize, apq: F) {
    let n = m.n();
    let app = m[(p, p)];
    let aqq = m[(q, q)];
    let theta = (aqq - app) / (F::cast(2.0) * apq);
    // For |θ| beyond 1e10 the exact root and 1/(2θ) agree to ~1e-30 relative,
    // and the asymptotic form cannot overflow θ².
    let t = if theta.abs() > F::cast(1e10) {
        (F::cast(2.0) * theta).recip()
    } else {
        let sign = if theta >= F::zero() { F::one() } else { -F::one() };
        sign / (theta.abs() + (theta * theta + F::one()).sqrt())
    };
    let c = (t * t + F::one()).sqrt().recip();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        m[(k, p)] = new_p;
        m[(p, k)] = new_p;
        m[(k, q)] = new_q;
        m[(q, k)] = new_q;
    }
    m[(p, p)] = app - t * apq;
    m[(q, q)] = aqq + t * apq;
    m[(p, q)] = F::zero();
    m[(q, p)] = F::zero();

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// |A| = Σ |μᵢ| vᵢ vᵢᵀ, assembled from a spectrum.
pub fn abs_via_spectrum<F: Scalar>(s: &Spectrum<F>) -> Matrix<F> {
    let n = s.values().len();
    let mut out = Matrix::zeros(n);
    for (i, &mu) in s.values().iter().enumerate() {
        let weight = mu.abs();
        if weight == F::zero() {
            continue;
        }
        let v = s.vectors().column(i);
        for r in 0..n {
            let wr = weight * v[r];
            for c in 0..n {
                out[(r, c)] += wr * v[c];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    fn complete_adjacency(n: usize) -> Matrix<f64> {
        Matrix::from_fn(n, |i, j| if i == j { 0.0 } else { 1.0 })
    }

    #[test]
    fn k3_spectrum_is_two_minus_one_minus_one() {
        let s = eig_symmetric(&complete_adjacency(3), &tol()).unwrap();
        let expected = [2.0, -1.0, -1.0];
        for (got, want) in s.values().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "got {got}, want {want}");
        }
        assert_eq!(
            s.inertia(),
            Inertia {
                positive: 1,
                negative: 2,
                zero: 0
            }
        );
        let sums = s.spectral_sums(&s.inertia());
        assert!((sums.s_plus - 4.0).abs() < 1e-12);
        assert!((sums.s_minus - 2.0).abs() < 1e-12);
        assert!((sums.energy_half - 2.0).abs() < 1e-12);
    }

    #[test]
    fn star_k13_inertia_counts_two_zeros() {
        // Star on 4 vertices: spectrum (√3, 0, 0, −√3).
        let mut a = Matrix::<f64>::zeros(4);
        for leaf in 1..4 {
            a[(0, leaf)] = 1.0;
            a[(leaf, 0)] = 1.0;
        }
        let s = eig_symmetric(&a, &tol()).unwrap();
        let r3 = 3f64.sqrt();
        assert!((s.values()[0] - r3).abs() < 1e-12);
        assert!((s.values()[3] + r3).abs() < 1e-12);
        assert_eq!(
            s.inertia(),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 2
            }
        );
    }

    #[test]
    fn zero_matrix_spectrum_is_all_zero_inertia() {
        let s = eig_symmetric(&Matrix::<f64>::zeros(5), &tol()).unwrap();
        assert_eq!(
            s.inertia(),
            Inertia {
                positive: 0,
                negative: 0,
                zero: 5
            }
        );
        assert!(s.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn eigenpairs_satisfy_residual_and_orthonormality() {
        // Deterministic non-trivial symmetric matrix.
        let n = 12;
        let a = Matrix::from_fn(n, |i, j| {
            let x = ((i * 31 + j * 17) % 13) as f64 / 13.0;
            let y = ((j * 31 + i * 17) % 13) as f64 / 13.0;
            x + y - 1.0
        });
        let s = eig_symmetric(&a, &tol()).unwrap();
        for (i, &mu) in s.values().iter().enumerate() {
            let v = s.vectors().column(i);
            let av = a.matvec(&v);
            let res: f64 = av
                .iter()
                .zip(&v)
                .map(|(&avi, &vi)| (avi - mu * vi).powi(2))
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-10, "residual {res} for eigenvalue {mu}");
        }
        let vt_v = s.vectors().transpose().matmul(s.vectors());
        let diff = vt_v.sub(&Matrix::identity(n)).max_abs();
        assert!(diff < 1e-12, "orthonormality defect {diff}");
    }

    #[test]
    fn rejects_asymmetric_input() {
        let mut a = Matrix::<f64>::zeros(3);
        a[(0, 1)] = 1.0;
        a[(1, 0)] = 1.0 + 1e-6;
        match eig_symmetric(&a, &tol()) {
            Err(LinalgError::NotSymmetric { .. }) => {}
            other => panic!("expected NotSymmetric, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_finite_input() {
        let mut a = Matrix::<f64>::zeros(2);
        a[(0, 1)] = f64::NAN;
        a[(1, 0)] = f64::NAN;
        assert!(matches!(
            eig_symmetric(&a, &tol()),
            Err(LinalgError::NonFinite { .. })
        ));
    }

    #[test]
    fn abs_of_sign_indefinite_matrix_is_psd() {
        let a = Matrix::from_fn(4, |i, j| if i == j { 0.0 } else { 1.0 });
        let s = eig_symmetric(&a, &tol()).unwrap();
        let abs_a = abs_via_spectrum(&s);
        // |A| for K₄ has eigenvalues {3, 1, 1, 1}: trace 6, PSD.
        assert!((abs_a.trace() - 6.0).abs() < 1e-10);
        let sa = eig_symmetric(&abs_a, &tol()).unwrap();
        assert!(sa.mu_min() > -1e-10);
    }
}
