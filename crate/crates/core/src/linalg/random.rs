//! Seeded random matrices and the scalar draw primitives behind them.
//!
//! Reproducibility contract: every randomized artifact in this crate is
//! derived from `ChaCha8Rng::seed_from_u64(seed)` and the explicit mapping
//! `u = (next_u64() >> 11) · 2⁻⁵³ ∈ [0, 1)`. The mapping is written out here
//! rather than delegated to a distribution type so the byte-for-byte output
//! promise survives dependency upgrades. Draw orders are documented on each
//! constructor.

use num_complex::Complex;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;

use super::complex::CMatrix;
use super::matrix::Matrix;

/// The one RNG used everywhere, keyed by a public u64 seed.
pub(crate) fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from [0, 1): top 53 bits of `next_u64`, scaled by 2⁻⁵³.
pub(crate) fn unit_uniform<F: Scalar>(rng: &mut ChaCha8Rng) -> F {
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    F::cast(u)
}

/// Uniform draw from [−1, 1), as 2u − 1.
pub(crate) fn symmetric_uniform<F: Scalar>(rng: &mut ChaCha8Rng) -> F {
    let two = F::cast(2.0);
    two * unit_uniform::<F>(rng) - F::one()
}

/// Random symmetric matrix with entries uniform in [−1, 1).
///
/// Draw order: the diagonal-inclusive upper triangle in row-major order
/// ((0,0), (0,1), …, (0,n−1), (1,1), …), each entry mirrored below the
/// diagonal.
pub fn random_symmetric<F: Scalar>(n: usize, seed: u64) -> Matrix<F> {
    let mut rng = seeded_rng(seed);
    let mut a = Matrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let v = symmetric_uniform::<F>(&mut rng);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    a
}

/// Random unitary matrix: a complex matrix with real and imaginary parts
/// uniform in [−1, 1) (row-major entry order, real part drawn before
/// imaginary), orthonormalized by two passes of modified Gram–Schmidt over
/// the columns.
///
/// Two passes make the orthonormality defect O(ε) regardless of how
/// ill-conditioned the raw draw is; a rank-deficient draw has probability
/// zero and would surface as a non-finite column, which is re-drawn from the
/// continuing stream.
pub fn random_unitary<F: Scalar>(n: usize, seed: u64) -> CMatrix<F> {
    let mut rng = seeded_rng(seed);
    let mut m = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let re = symmetric_uniform::<F>(&mut rng);
            let im = symmetric_uniform::<F>(&mut rng);
            m[(i, j)] = Complex::new(re, im);
        }
    }

    for pass in 0..2 {
        for j in 0..n {
            // Remove projections onto the already-final columns 0..j.
            for k in 0..j {
                let mut dot = Complex::new(F::zero(), F::zero());
                for r in 0..n {
                    dot += m[(r, k)].conj() * m[(r, j)];
                }
                for r in 0..n {
                    let adj = m[(r, k)] * dot;
                    m[(r, j)] -= adj;
                }
            }
            let mut norm_sq = F::zero();
            for r in 0..n {
                norm_sq += m[(r, j)].norm_sqr();
            }
            let norm = norm_sq.sqrt();
            if norm > F::zero() && norm.is_finite() {
                let inv = norm.recip();
                for r in 0..n {
                    m[(r, j)] *= inv;
                }
            } else if pass == 1 {
                // Numerically impossible for a continuous draw; keep the
                // column as a fresh draw so the result is at least finite.
                for r in 0..n {
                    let re = symmetric_uniform::<F>(&mut rng);
                    let im = symmetric_uniform::<F>(&mut rng);
                    m[(r, j)] = Complex::new(re, im);
                }
            }
        }
    }
    m
}
