//! Spectral lower bounds on the chromatic number, exact small-instance
//! coloring oracles, and constructive verification of the unitary-conversion
//! identities behind them.
//!
//! The library computes the full hierarchy of eigenvalue bounds for a graph
//! — Hoffman, generalized Hoffman, the proven χ ≥ S⁺/S⁻ bound and the
//! conjectured χ ≥ 1 + S⁺/S⁻, plus the classical Cvetković, Myers–Liu,
//! Edwards–Elphick, Bollobás–Nikiforov, and Wilf comparisons — and checks
//! them against exact chromatic and independence numbers from
//! branch-and-bound solvers. The [`conversion`] module verifies the
//! algebraic identities that power the conjecture (diagonal unitaries from a
//! proper coloring annihilate W*A; pinching; normalized orthogonal
//! representations), and [`harness`] reproduces the named-graph and random
//! G(n, p) experiments, including a counterexample search that treats the
//! conjecture as falsifiable.
//!
//! Numeric code is generic over the scalar type via [`scalar::Scalar`]
//! (f32/f64); the `*64` aliases below fix the common double-precision
//! instantiations. Graphs and the exact solvers are scalar-free.

pub mod bounds;
pub mod config;
pub mod conversion;
pub mod exact;
pub mod graphs;
pub mod harness;
pub mod linalg;
pub mod scalar;

/// Default scalar for applications: double precision.
pub type Real = f64;

/// Double-precision dense symmetric matrix.
pub type Matrix64 = linalg::Matrix<Real>;

/// Double-precision dense complex matrix.
pub type CMatrix64 = linalg::CMatrix<Real>;

/// Double-precision eigendecomposition.
pub type Spectrum64 = linalg::Spectrum<Real>;

/// Double-precision tolerance/config record.
pub type Tolerances64 = config::Tolerances<Real>;

/// Double-precision bound table.
pub type BoundReport64 = bounds::BoundReport<Real>;

/// Double-precision Schur weight matrix.
pub type WeightMatrix64 = graphs::WeightMatrix<Real>;
