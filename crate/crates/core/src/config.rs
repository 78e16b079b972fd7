//! Central tolerance and budget configuration.
//!
//! The underlying theory is exact; every threshold below is an engineering
//! choice for double-ish precision at desk scale (n ≤ ~500). They live in one
//! record so tests can pin or tighten them and the CLI can print them
//! (`--show-config`) and override them from flags.

use serde::Serialize;

use crate::scalar::Scalar;

/// Every numeric threshold and default budget used by the library.
#[derive(Debug, Clone, Serialize)]
#[serde(bound = "F: Serialize")]
pub struct Tolerances<F> {
    /// Jacobi convergence target for the off-diagonal Frobenius norm,
    /// relative to ‖A‖_F of the input.
    pub jacobi_conv_factor: F,
    /// Hard cap on Jacobi sweeps before reporting non-convergence.
    pub jacobi_max_sweeps: usize,
    /// Eigenvalue sign classification: zero_tol = factor · n · max|a_kℓ|.
    pub zero_tol_factor: F,
    /// Eigenpair residual budget: ‖A vᵢ − μᵢ vᵢ‖₂ ≤ factor · n · max|a_kℓ|.
    pub eig_residual_factor: F,
    /// Eigenvector orthonormality: ‖VᵀV − I‖_max ≤ factor · n.
    pub orthonormality_factor: F,
    /// Relative asymmetry accepted by the symmetric eigensolver.
    pub asymmetry_rel_tol: F,
    /// Absolute threshold for annihilation / reversal / pinching /
    /// representation residuals.
    pub residual_tol: F,
    /// Modulus slack for entries of a normalized orthogonal representation.
    pub normalization_tol: F,
    /// Slack for majorization partial sums and doubly-stochastic row sums.
    pub majorization_tol: F,
    /// Slack when comparing bounds against exact chromatic numbers
    /// (verdict classification, exactness families).
    pub exactness_tol: F,
    /// Slack for bound-ordering chains and scale-invariance checks.
    pub ordering_tol: F,
    /// Default branch-and-bound node budget for exact χ and α.
    pub node_budget: u64,
    /// Sweep cap for the Barnes diagonal-scaling hill climb.
    pub barnes_sweeps: usize,
}

impl<F: Scalar> Default for Tolerances<F> {
    fn default() -> Self {
        Tolerances {
            jacobi_conv_factor: F::cast(1e-12),
            jacobi_max_sweeps: 100,
            zero_tol_factor: F::cast(1e-8),
            eig_residual_factor: F::cast(1e-8),
            orthonormality_factor: F::cast(1e-10),
            asymmetry_rel_tol: F::cast(1e-12),
            residual_tol: F::cast(1e-10),
            normalization_tol: F::cast(1e-12),
            majorization_tol: F::cast(1e-8),
            exactness_tol: F::cast(1e-6),
            ordering_tol: F::cast(1e-9),
            node_budget: 10_000_000,
            barnes_sweeps: 50,
        }
    }
}

impl<F: Scalar> Tolerances<F> {
    /// Sign-classification threshold for a spectrum computed from an n×n
    /// matrix with maximum entry magnitude `max_abs`.
    pub fn zero_tol(&self, n: usize, max_abs: F) -> F {
        self.zero_tol_factor * F::cast_usize(n) * max_abs
    }

    /// Residual budget for eigenpairs of the same matrix.
    pub fn eig_residual(&self, n: usize, max_abs: F) -> F {
        self.eig_residual_factor * F::cast_usize(n) * max_abs
    }

    /// Orthonormality budget for an n×n eigenvector matrix.
    pub fn orthonormality_tol(&self, n: usize) -> F {
        self.orthonormality_factor * F::cast_usize(n)
    }
}
