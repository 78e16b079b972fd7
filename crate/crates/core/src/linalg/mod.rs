//! Dense linear algebra sized for spectral graph theory at desk scale:
//! real symmetric eigendecomposition (cyclic Jacobi), complex matrix
//! arithmetic for unitary conjugation, majorization tests, and seeded
//! random matrix constructions.

mod complex;
mod eigen;
mod majorization;
mod matrix;
mod random;

pub use complex::CMatrix;
pub use eigen::{abs_via_spectrum, eig_symmetric, Inertia, LinalgError, Spectrum, SpectralSums};
pub use majorization::is_majorized;
pub use matrix::Matrix;
pub use random::{random_symmetric, random_unitary};

pub(crate) use random::{seeded_rng, symmetric_uniform, unit_uniform};
