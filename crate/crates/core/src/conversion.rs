//! Constructive verification of the unitary-conversion identities: diagonal
//! unitaries built from a proper coloring annihilate the weighted adjacency
//! matrix (Σ_s U_s (W*A) U_s† = 0), the partial sum reverses the sign
//! (Σ_{s<c} U_s (−W*A) U_s† = W*A), conjugation by the full family equals a
//! pinching by color-class projectors, and normalized orthogonal
//! representations — Fourier columns from a coloring, ±1 vectors for
//! Hadamard graphs — yield the same annihilation with d unitaries.
//!
//! Everything here returns residuals (max-abs entries of a difference), so
//! callers decide pass/fail against [`Tolerances::residual_tol`].

use num_complex::Complex;
use thiserror::Error;

use crate::config::Tolerances;
use crate::exact::{Coloring, ColoringError};
use crate::graphs::{schur_product, Graph, GraphError, WeightMatrix};
use crate::linalg::{CMatrix, LinalgError};
use crate::scalar::Scalar;

/// Errors from the conversion verifiers.
#[derive(Debug, Error)]
pub enum ConversionError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("dimension N must be even, got {0}")]
    OddDimension(usize),
    #[error(
        "representation is not normalized: vertex {vertex}, coordinate {coord} has modulus {modulus}"
    )]
    NotNormalized {
        vertex: usize,
        coord: usize,
        modulus: f64,
    },
    #[error("coloring uses color {color}, above the unitary order {order}")]
    ColorAboveOrder { color: u32, order: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },
}

/// ζ^e for ζ = exp(2πi/c). The exponent is reduced mod c before the
/// trigonometry so large exponents lose no precision.
fn root_power<F: Scalar>(c: usize, exponent: u64) -> Complex<F> {
    let reduced = (exponent % c as u64) as f64;
    let angle = std::f64::consts::TAU * reduced / c as f64;
    Complex::new(F::cast(angle.cos()), F::cast(angle.sin()))
}

/// The Fourier matrix F_c with entries (F_c)_{jk} = ζ^{j·k}, 1-based indices,
/// ζ = exp(2πi/c). Its last row and column are all-ones and F_c F_c† = c·I.
#[derive(Debug, Clone)]
pub struct FourierMatrix<F> {
    order: usize,
    matrix: CMatrix<F>,
}

impl<F: Scalar> FourierMatrix<F> {
    pub fn new(order: usize) -> FourierMatrix<F> {
        let matrix = CMatrix::from_fn(order, |j0, k0| {
            root_power(order, (j0 as u64 + 1) * (k0 as u64 + 1))
        });
        FourierMatrix { order, matrix }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn matrix(&self) -> &CMatrix<F> {
        &self.matrix
    }

    /// Column k (1-based) as a vector.
    pub fn column(&self, k: usize) -> Vec<Complex<F>> {
        (0..self.order).map(|j0| self.matrix[(j0, k - 1)]).collect()
    }
}

/// Diagonals of U_1..U_c for an assignment: (U_s)_{kk} = ζ^{Φ(k)·s}.
fn unitary_diagonals<F: Scalar>(assignment: &[u32], c: usize) -> Vec<Vec<Complex<F>>> {
    (1..=c as u64)
        .map(|s| {
            assignment
                .iter()
                .map(|&color| root_power(c, color as u64 * s))
                .collect()
        })
        .collect()
}

/// Checks that every color fits the unitary order c.
fn check_colors_fit(assignment: &[u32], c: usize) -> Result<(), ConversionError> {
    for &color in assignment {
        if color as usize > c {
            return Err(ConversionError::ColorAboveOrder { color, order: c });
        }
    }
    Ok(())
}

/// The diagonal unitaries U_s = diag(ζ^{Φ(1)s}, …, ζ^{Φ(n)s}) for s = 1..c,
/// ζ = exp(2πi/c). U_c is the identity. Colors must lie in 1..=c.
pub fn build_unitaries<F: Scalar>(
    phi: &Coloring,
    c: usize,
) -> Result<Vec<CMatrix<F>>, ConversionError> {
    check_colors_fit(phi.assignment(), c)?;
    Ok(unitary_diagonals(phi.assignment(), c)
        .into_iter()
        .map(|diag| CMatrix::diag_from(&diag))
        .collect())
}

/// Σ_s U_s X U_s† over the given diagonals (U_s† X U_s when `inverse`).
/// Diagonal conjugation contributes u_k · x_{kℓ} · conj(u_ℓ) per entry.
fn conjugated_sum<F: Scalar>(
    diagonals: &[Vec<Complex<F>>],
    x: &CMatrix<F>,
    inverse: bool,
) -> CMatrix<F> {
    let n = x.n();
    let mut sum = CMatrix::zeros(n);
    for diag in diagonals {
        for k in 0..n {
            for l in 0..n {
                let phase = if inverse {
                    diag[k].conj() * diag[l]
                } else {
                    diag[k] * diag[l].conj()
                };
                sum[(k, l)] += phase * x[(k, l)];
            }
        }
    }
    sum
}

/// Max-abs entry of Σ_{s=1..c} U_s X U_s†, maximized over the plain and
/// inverse unitary variants, for an arbitrary assignment (colors in 1..=c,
/// properness NOT required). This is the sensitivity probe: on a proper
/// coloring the residual vanishes, on a monochromatic edge it reaches c.
pub fn annihilation_residual_raw<F: Scalar>(
    g: &Graph,
    w: &WeightMatrix<F>,
    assignment: &[u32],
    c: usize,
) -> Result<F, ConversionError> {
    if assignment.len() != g.n() {
        return Err(ConversionError::Dimension {
            left: assignment.len(),
            right: g.n(),
        });
    }
    check_colors_fit(assignment, c)?;
    let wa = schur_product(w, &g.adjacency_matrix::<F>())?;
    let x = CMatrix::from_real(&wa);
    let diagonals = unitary_diagonals::<F>(assignment, c);
    let forward = conjugated_sum(&diagonals, &x, false).max_abs_norm();
    let inverse = conjugated_sum(&diagonals, &x, true).max_abs_norm();
    Ok(if forward > inverse { forward } else { inverse })
}

/// Annihilation residual for a proper coloring: max-abs entry of
/// Σ_{s=1..c} U_s (W*A) U_s†, maximized over the plain and inverse variants,
/// where c is the coloring's largest color. The identity makes this zero.
///
/// The coloring is re-validated against `g`; a monochromatic edge is
/// reported as the error.
pub fn verify_annihilation<F: Scalar>(
    g: &Graph,
    w: &WeightMatrix<F>,
    phi: &Coloring,
) -> Result<F, ConversionError> {
    let phi = Coloring::try_new(g, phi.assignment().to_vec())?;
    annihilation_residual_raw(g, w, phi.assignment(), phi.colors_used() as usize)
}

/// Sign-reversal residual: max-abs entry of
/// Σ_{s=1..c−1} U_s (−W*A) U_s† − (W*A), maximized over the plain and
/// inverse variants. The identity makes this zero for proper colorings.
pub fn verify_reversal<F: Scalar>(
    g: &Graph,
    w: &WeightMatrix<F>,
    phi: &Coloring,
) -> Result<F, ConversionError> {
    let phi = Coloring::try_new(g, phi.assignment().to_vec())?;
    let c = phi.colors_used() as usize;
    let wa = schur_product(w, &g.adjacency_matrix::<F>())?;
    let x = CMatrix::from_real(&wa);
    let minus_one = Complex::new(-F::one(), F::zero());
    let neg_x = x.scaled(minus_one);
    let diagonals = unitary_diagonals::<F>(phi.assignment(), c);
    let partial = &diagonals[..c.saturating_sub(1)];
    let mut worst = F::zero();
    for inverse in [false, true] {
        let sum = conjugated_sum(partial, &neg_x, inverse);
        let residual = sum.sub(&x).expect("same dimension").max_abs_norm();
        if residual > worst {
            worst = residual;
        }
    }
    Ok(worst)
}

/// Pinching residual: max-abs entry of
/// Σ_{s=1..c} U_s X U_s† − c·Σ_b P_b X P_b, where P_b projects onto color
/// class b. The two sides agree for every complex X and proper coloring.
pub fn pinching_check<F: Scalar>(x: &CMatrix<F>, phi: &Coloring) -> Result<F, ConversionError> {
    let n = phi.assignment().len();
    if x.n() != n {
        return Err(ConversionError::Dimension {
            left: x.n(),
            right: n,
        });
    }
    let c = phi.colors_used() as usize;
    let diagonals = unitary_diagonals::<F>(phi.assignment(), c);
    let lhs = conjugated_sum(&diagonals, x, false);
    let cf = F::cast_usize(c);
    let assignment = phi.assignment();
    let rhs = CMatrix::from_fn(n, |k, l| {
        if assignment[k] == assignment[l] {
            x[(k, l)] * Complex::new(cf, F::zero())
        } else {
            Complex::new(F::zero(), F::zero())
        }
    });
    Ok(lhs.sub(&rhs).expect("same dimension").max_abs_norm())
}

/// A map from vertices to complex d-vectors in which adjacent vertices
/// receive orthogonal vectors; `normalized` means every entry has modulus 1.
#[derive(Debug, Clone)]
pub struct OrthogonalRepresentation<F> {
    dimension: usize,
    vectors: Vec<Vec<Complex<F>>>,
    normalized: bool,
}

impl<F: Scalar> OrthogonalRepresentation<F> {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// One d-vector per vertex, 0-based.
    pub fn vectors(&self) -> &[Vec<Complex<F>>] {
        &self.vectors
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Largest |Ψ(k)†Ψ(ℓ)| over the edges of `g` — the orthogonality defect.
    /// Zero (within residual tolerance) certifies a valid representation.
    pub fn adjacency_orthogonality_defect(&self, g: &Graph) -> Result<F, ConversionError> {
        if self.vectors.len() != g.n() {
            return Err(ConversionError::Dimension {
                left: self.vectors.len(),
                right: g.n(),
            });
        }
        let mut worst = F::zero();
        for &(u, v) in g.edges() {
            let a = &self.vectors[(u - 1) as usize];
            let b = &self.vectors[(v - 1) as usize];
            let mut inner = Complex::new(F::zero(), F::zero());
            for s in 0..self.dimension {
                inner += a[s].conj() * b[s];
            }
            let modulus = inner.norm();
            if modulus > worst {
                worst = modulus;
            }
        }
        Ok(worst)
    }

    /// Largest deviation of any entry modulus from 1.
    pub fn normalization_defect(&self) -> F {
        let mut worst = F::zero();
        for v in &self.vectors {
            for z in v {
                let dev = (z.norm() - F::one()).abs();
                if dev > worst {
                    worst = dev;
                }
            }
        }
        worst
    }
}

/// The ±1 representation of the Hadamard graph G_N: vertex k (1-based,
/// bitmask k−1) maps to Ψ(k) = ((−1)^{k_1}, …, (−1)^{k_N}). Vertices at
/// Hamming distance N/2 satisfy Ψ(k)†Ψ(ℓ) = N − 2·d_H = 0, so this is a
/// normalized representation of dimension N, certifying ξ′(G_N) ≤ N.
pub fn hadamard_representation<F: Scalar>(
    n_bits: usize,
) -> Result<OrthogonalRepresentation<F>, ConversionError> {
    if !n_bits.is_multiple_of(2) || n_bits == 0 {
        return Err(ConversionError::OddDimension(n_bits));
    }
    let n = 1usize << n_bits;
    let vectors = (0..n)
        .map(|mask| {
            (0..n_bits)
                .map(|bit| {
                    let sign = if (mask >> bit) & 1 == 0 {
                        F::one()
                    } else {
                        -F::one()
                    };
                    Complex::new(sign, F::zero())
                })
                .collect()
        })
        .collect();
    Ok(OrthogonalRepresentation {
        dimension: n_bits,
        vectors,
        normalized: true,
    })
}

/// The Fourier-column representation of a proper coloring: vertex k receives
/// column Φ(k) of F_c, i.e. Ψ(k)_s = ζ^{s·Φ(k)}. Differently colored
/// vertices get orthogonal columns, so this is a normalized representation
/// of dimension c — the witness for ξ′ ≤ χ.
pub fn coloring_to_representation<F: Scalar>(
    phi: &Coloring,
    c: usize,
) -> Result<OrthogonalRepresentation<F>, ConversionError> {
    check_colors_fit(phi.assignment(), c)?;
    let vectors = phi
        .assignment()
        .iter()
        .map(|&color| {
            (1..=c as u64)
                .map(|s| root_power(c, s * color as u64))
                .collect()
        })
        .collect();
    Ok(OrthogonalRepresentation {
        dimension: c,
        vectors,
        normalized: true,
    })
}

/// Unitaries from a normalized representation plus their annihilation
/// residual.
#[derive(Debug, Clone)]
pub struct RepresentationUnitaries<F> {
    /// U_s = diag(Ψ(1)_s, …, Ψ(n)_s) for s = 1..d.
    pub unitaries: Vec<CMatrix<F>>,
    /// Max-abs entry of Σ_{s=1..d} U_s A U_s†.
    pub residual: F,
}

/// Converts a normalized orthogonal representation of `g` into d diagonal
/// unitaries and checks the annihilation Σ_{s=1..d} U_s A U_s† = 0 (the
/// entrywise sum equals a_{kℓ} · conj(Ψ(k)†Ψ(ℓ)), which orthogonality kills).
pub fn representation_to_unitaries<F: Scalar>(
    rep: &OrthogonalRepresentation<F>,
    g: &Graph,
    tol: &Tolerances<F>,
) -> Result<RepresentationUnitaries<F>, ConversionError> {
    if rep.vectors().len() != g.n() {
        return Err(ConversionError::Dimension {
            left: rep.vectors().len(),
            right: g.n(),
        });
    }
    for (vertex, v) in rep.vectors().iter().enumerate() {
        for (coord, z) in v.iter().enumerate() {
            let modulus = z.norm();
            if (modulus - F::one()).abs() > tol.normalization_tol {
                return Err(ConversionError::NotNormalized {
                    vertex: vertex + 1,
                    coord: coord + 1,
                    modulus: modulus.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
    }
    let d = rep.dimension();
    let diagonals: Vec<Vec<Complex<F>>> = (0..d)
        .map(|s| rep.vectors().iter().map(|v| v[s]).collect())
        .collect();
    let a = CMatrix::from_real(&g.adjacency_matrix::<F>());
    let residual = conjugated_sum(&diagonals, &a, false).max_abs_norm();
    let unitaries = diagonals
        .iter()
        .map(|diag| CMatrix::diag_from(diag))
        .collect();
    Ok(RepresentationUnitaries {
        unitaries,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Family;
    use crate::linalg::random_unitary;

    fn family(spec: &str) -> Graph {
        Family::parse(spec).unwrap().generate(None).unwrap()
    }

    fn coloring(g: &Graph, colors: &[u32]) -> Coloring {
        Coloring::try_new(g, colors.to_vec()).unwrap()
    }

    #[test]
    fn fourier_invariants_hold_for_orders_2_to_12() {
        for c in 2..=12 {
            let f = FourierMatrix::<f64>::new(c);
            let gram = f.matrix().multiply(&f.matrix().adjoint()).unwrap();
            let scaled_id = CMatrix::identity(c).scaled(Complex::new(c as f64, 0.0));
            let defect = gram.sub(&scaled_id).unwrap().max_abs_norm();
            assert!(defect < 1e-10, "F_{c} F_{c}† ≠ {c}I, defect {defect}");
            let gram2 = f.matrix().adjoint().multiply(f.matrix()).unwrap();
            let defect2 = gram2.sub(&scaled_id).unwrap().max_abs_norm();
            assert!(defect2 < 1e-10, "F_{c}† F_{c} ≠ {c}I, defect {defect2}");
            for i in 0..c {
                let one = Complex::new(1.0, 0.0);
                assert!((f.matrix()[(c - 1, i)] - one).norm() < 1e-10, "last row");
                assert!((f.matrix()[(i, c - 1)] - one).norm() < 1e-10, "last column");
            }
        }
    }

    #[test]
    fn k2_unitaries_match_hand_computation() {
        let g = family("complete:2");
        let phi = coloring(&g, &[1, 2]);
        let us = build_unitaries::<f64>(&phi, 2).unwrap();
        assert_eq!(us.len(), 2);
        assert!((us[0][(0, 0)] - Complex::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((us[0][(1, 1)] - Complex::new(1.0, 0.0)).norm() < 1e-12);
        for i in 0..2 {
            assert!((us[1][(i, i)] - Complex::new(1.0, 0.0)).norm() < 1e-12, "U_c = I");
        }
    }

    #[test]
    fn k3_unitaries_match_hand_computation() {
        let g = family("complete:3");
        let phi = coloring(&g, &[1, 2, 3]);
        let us = build_unitaries::<f64>(&phi, 3).unwrap();
        let omega = Complex::from_polar(1.0, std::f64::consts::TAU / 3.0);
        assert!((us[0][(0, 0)] - omega).norm() < 1e-12);
        assert!((us[0][(1, 1)] - omega * omega).norm() < 1e-12);
        assert!((us[0][(2, 2)] - Complex::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn last_unitary_is_identity_for_any_coloring() {
        let g = family("petersen");
        let phi = crate::exact::greedy_coloring(&g);
        let c = phi.colors_used() as usize;
        let us = build_unitaries::<f64>(&phi, c).unwrap();
        for k in 0..g.n() {
            assert!((us[c - 1][(k, k)] - Complex::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn color_above_order_is_rejected() {
        let g = family("complete:2");
        let phi = coloring(&g, &[1, 3]);
        assert!(matches!(
            build_unitaries::<f64>(&phi, 2),
            Err(ConversionError::ColorAboveOrder { color: 3, order: 2 })
        ));
    }

    #[test]
    fn annihilation_on_k2_is_exact() {
        let g = family("complete:2");
        let phi = coloring(&g, &[1, 2]);
        let res = verify_annihilation(&g, &WeightMatrix::<f64>::ones(2), &phi).unwrap();
        assert!(res < 1e-14, "residual {res}");
    }

    #[test]
    fn annihilation_on_petersen_with_j_and_random_w() {
        let g = family("petersen");
        let phi = match crate::exact::chromatic_number(&g, 10_000_000) {
            crate::exact::ChromaticResult::Exact { coloring, .. } => coloring,
            _ => panic!("petersen χ search must finish"),
        };
        let res = verify_annihilation(&g, &WeightMatrix::<f64>::ones(10), &phi).unwrap();
        assert!(res < 1e-10, "J residual {res}");
        for seed in [1u64, 2, 3] {
            let w = WeightMatrix::<f64>::random(10, seed);
            let res = verify_annihilation(&g, &w, &phi).unwrap();
            assert!(res < 1e-10, "seed {seed} residual {res}");
        }
    }

    #[test]
    fn annihilation_rejects_foreign_coloring() {
        // A proper coloring of one graph re-validated against a denser one.
        let path = family("path:3");
        let phi = coloring(&path, &[1, 2, 1]);
        let triangle = family("complete:3");
        match verify_annihilation(&triangle, &WeightMatrix::<f64>::ones(3), &phi) {
            Err(ConversionError::Coloring(ColoringError::Monochromatic { u: 1, v: 3, color: 1 })) => {}
            other => panic!("expected monochromatic diagnostic, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_k3_coloring_leaves_large_residual() {
        let g = family("complete:3");
        let res =
            annihilation_residual_raw(&g, &WeightMatrix::<f64>::ones(3), &[1, 2, 2], 3).unwrap();
        assert!(res >= 1.0, "sensitivity residual {res} < 1");
    }

    #[test]
    fn reversal_on_k2_c5_k4() {
        let k2 = family("complete:2");
        let res = verify_reversal(&k2, &WeightMatrix::<f64>::ones(2), &coloring(&k2, &[1, 2])).unwrap();
        assert!(res < 1e-14, "K₂ residual {res}");

        let c5 = family("cycle:5");
        let phi = coloring(&c5, &[1, 2, 1, 2, 3]);
        let res = verify_reversal(&c5, &WeightMatrix::<f64>::ones(5), &phi).unwrap();
        assert!(res < 1e-10, "C₅ residual {res}");

        let k4 = family("complete:4");
        let phi = coloring(&k4, &[1, 2, 3, 4]);
        let res = verify_reversal(&k4, &WeightMatrix::<f64>::ones(4), &phi).unwrap();
        assert!(res < 1e-10, "K₄ residual {res}");
    }

    #[test]
    fn reversal_with_random_weights() {
        let g = family("kneser:6,2");
        let phi = match crate::exact::chromatic_number(&g, 10_000_000) {
            crate::exact::ChromaticResult::Exact { coloring, .. } => coloring,
            _ => panic!("χ search must finish"),
        };
        for seed in [5u64, 6] {
            let w = WeightMatrix::<f64>::random(g.n(), seed);
            let res = verify_reversal(&g, &w, &phi).unwrap();
            assert!(res < 1e-10, "seed {seed} residual {res}");
        }
    }

    #[test]
    fn pinching_diagonal_x_is_exact() {
        let g = family("cycle:5");
        let phi = coloring(&g, &[1, 2, 1, 2, 3]);
        let x = CMatrix::from_fn(5, |i, j| {
            if i == j {
                Complex::new(i as f64 + 0.5, -(i as f64))
            } else {
                Complex::new(0.0, 0.0)
            }
        });
        let res = pinching_check(&x, &phi).unwrap();
        assert!(res < 1e-12, "diagonal pinching residual {res}");
    }

    #[test]
    fn pinching_on_weighted_adjacency_vanishes() {
        let g = family("petersen");
        let phi = match crate::exact::chromatic_number(&g, 10_000_000) {
            crate::exact::ChromaticResult::Exact { coloring, .. } => coloring,
            _ => panic!("χ search must finish"),
        };
        let wa =
            schur_product(&WeightMatrix::<f64>::random(10, 4), &g.adjacency_matrix()).unwrap();
        let x = CMatrix::from_real(&wa);
        let res = pinching_check(&x, &phi).unwrap();
        assert!(res < 1e-10, "pinching residual {res}");
    }

    #[test]
    fn pinching_on_random_complex_matrices() {
        // Unitary columns provide seeded complex matrices with no structure.
        let g = family("cycle:6");
        let phi = coloring(&g, &[1, 2, 1, 2, 1, 2]);
        for seed in 0..10u64 {
            let x = random_unitary::<f64>(6, seed);
            let res = pinching_check(&x, &phi).unwrap();
            assert!(res < 1e-10, "seed {seed} residual {res}");
        }
    }

    #[test]
    fn pinching_dimension_mismatch() {
        let g = family("complete:3");
        let phi = coloring(&g, &[1, 2, 3]);
        let x = CMatrix::<f64>::identity(4);
        assert!(matches!(
            pinching_check(&x, &phi),
            Err(ConversionError::Dimension { left: 4, right: 3 })
        ));
    }

    #[test]
    fn hadamard_representation_certifies_orthogonality() {
        for n_bits in [2usize, 4] {
            let rep = hadamard_representation::<f64>(n_bits).unwrap();
            assert_eq!(rep.dimension(), n_bits);
            assert!(rep.is_normalized());
            assert!(rep.normalization_defect() < 1e-15);
            let g = family(&format!("hadamard:{n_bits}"));
            let defect = rep.adjacency_orthogonality_defect(&g).unwrap();
            assert!(defect < 1e-12, "N={n_bits} defect {defect}");
        }
        assert!(matches!(
            hadamard_representation::<f64>(3),
            Err(ConversionError::OddDimension(3))
        ));
    }

    #[test]
    #[allow(clippy::needless_range_loop)] // s indexes two slices in lockstep
    fn coloring_representation_uses_fourier_columns() {
        let g = family("complete:2");
        let phi = coloring(&g, &[1, 2]);
        let rep = coloring_to_representation::<f64>(&phi, 2).unwrap();
        let f = FourierMatrix::<f64>::new(2);
        for (vertex, &color) in phi.assignment().iter().enumerate() {
            let column = f.column(color as usize);
            for s in 0..2 {
                assert!((rep.vectors()[vertex][s] - column[s]).norm() < 1e-12);
            }
        }
        let defect = rep.adjacency_orthogonality_defect(&g).unwrap();
        assert!(defect < 1e-12);
    }

    #[test]
    fn coloring_representation_on_k3_is_orthogonal() {
        let g = family("complete:3");
        let phi = coloring(&g, &[1, 2, 3]);
        let rep = coloring_to_representation::<f64>(&phi, 3).unwrap();
        assert_eq!(rep.dimension(), 3);
        assert!(rep.normalization_defect() < 1e-12);
        assert!(rep.adjacency_orthogonality_defect(&g).unwrap() < 1e-10);
    }

    #[test]
    fn representation_unitaries_annihilate() {
        let tol = Tolerances::<f64>::default();

        let k2 = family("complete:2");
        let rep = coloring_to_representation::<f64>(&coloring(&k2, &[1, 2]), 2).unwrap();
        let out = representation_to_unitaries(&rep, &k2, &tol).unwrap();
        assert!(out.residual < 1e-14, "K₂ residual {}", out.residual);
        assert_eq!(out.unitaries.len(), 2);

        let g4 = family("hadamard:4");
        let rep = hadamard_representation::<f64>(4).unwrap();
        let out = representation_to_unitaries(&rep, &g4, &tol).unwrap();
        assert!(out.residual < 1e-10, "G₄ residual {}", out.residual);
        assert_eq!(out.unitaries.len(), 4, "d = 4 < n = 16 unitaries");
    }

    #[test]
    #[allow(clippy::needless_range_loop)] // s indexes two containers in lockstep
    fn representation_matches_unitary_construction() {
        let g = family("cycle:5");
        let phi = coloring(&g, &[1, 2, 1, 2, 3]);
        let c = 3;
        let rep = coloring_to_representation::<f64>(&phi, c).unwrap();
        let us = build_unitaries::<f64>(&phi, c).unwrap();
        for s in 0..c {
            for k in 0..g.n() {
                assert!(
                    (rep.vectors()[k][s] - us[s][(k, k)]).norm() < 1e-12,
                    "Ψ(k)_s must equal (U_s)_kk"
                );
            }
        }
    }

    #[test]
    fn non_normalized_representation_is_rejected() {
        let g = family("complete:2");
        let rep = OrthogonalRepresentation {
            dimension: 2,
            vectors: vec![
                vec![Complex::new(2.0, 0.0), Complex::new(1.0, 0.0)],
                vec![Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)],
            ],
            normalized: false,
        };
        assert!(matches!(
            representation_to_unitaries(&rep, &g, &Tolerances::default()),
            Err(ConversionError::NotNormalized {
                vertex: 1,
                coord: 1,
                ..
            })
        ));
    }
}
