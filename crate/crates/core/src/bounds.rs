//! Spectral lower bounds on the chromatic number, assembled into one report:
//! Hoffman and its generalized partial-sum form, the eigenvalue-square ratio
//! S⁺/S⁻ (both the proven "weaker" form and the conjectured 1 + S⁺/S⁻),
//! the classical Cvetković / Myers–Liu / Edwards–Elphick / Bollobás–Nikiforov
//! bounds, the Wilf upper bound, the independence-number bound n − α + 1,
//! a feasibility-checked diagonal-scaling heuristic, and Schur-weighted
//! variants over W*A.
//!
//! Degenerate cases (edgeless graphs, vanishing denominators) never divide:
//! the affected bound reports value 1 with an explicit `degenerate` flag.

use serde::Serialize;
use thiserror::Error;

use crate::config::Tolerances;
use crate::exact::{chromatic_number, independence_number, AlphaResult, ChromaticResult};
use crate::graphs::{schur_product, Graph, GraphError, WeightMatrix};
use crate::linalg::{eig_symmetric, LinalgError, Matrix, Spectrum, SpectralSums};
use crate::scalar::Scalar;

/// Errors surfaced while assembling bounds.
#[derive(Debug, Error)]
pub enum BoundsError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One bound value plus a flag marking degenerate inputs (edgeless graph or
/// vanishing denominator), where the value defaults to 1 — the chromatic
/// number of any non-empty edgeless graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(bound = "F: Serialize")]
pub struct Bound<F> {
    pub value: F,
    pub degenerate: bool,
}

impl<F: Scalar> Bound<F> {
    fn fine(value: F) -> Self {
        Bound {
            value,
            degenerate: false,
        }
    }

    fn degenerate() -> Self {
        Bound {
            value: F::one(),
            degenerate: true,
        }
    }
}

/// Hoffman bound χ ≥ 1 + μ₁/(−μ_n). Degenerate when μ_n ≥ −zero_tol
/// (edgeless graph).
pub fn hoffman<F: Scalar>(s: &Spectrum<F>) -> Bound<F> {
    if s.values().is_empty() {
        return Bound::degenerate();
    }
    let mu_n = s.mu_min();
    if mu_n >= -s.zero_tol() {
        return Bound::degenerate();
    }
    Bound::fine(F::one() + s.mu_max() / -mu_n)
}

/// Generalized Hoffman bound: 1 + max over m = 1..n−1 of
/// (μ₁ + … + μ_m) / −(μ_n + … + μ_{n−m+1}), skipping m whose denominator is
/// ≤ zero_tol. Returns the bound and the smallest maximizing m (0 when every
/// m is degenerate).
pub fn generalized_hoffman<F: Scalar>(s: &Spectrum<F>) -> (Bound<F>, usize) {
    let values = s.values();
    let n = values.len();
    let mut best: Option<(F, usize)> = None;
    let mut top_sum = F::zero();
    let mut bottom_sum = F::zero();
    for m in 1..n {
        top_sum += values[m - 1];
        bottom_sum += values[n - m];
        let denominator = -bottom_sum;
        if denominator <= s.zero_tol() {
            continue;
        }
        let ratio = top_sum / denominator;
        match best {
            Some((current, _)) if ratio <= current => {}
            _ => best = Some((ratio, m)),
        }
    }
    match best {
        Some((ratio, m)) => (Bound::fine(F::one() + ratio), m),
        None => (Bound::degenerate(), 0),
    }
}

/// The proven bound χ ≥ S⁺/S⁻ ("weaker") and the conjectured
/// χ ≥ 1 + S⁺/S⁻, from precomputed spectral sums. Degenerate when
/// S⁻ ≤ zero_tol (edgeless graph).
pub fn weaker_and_conjecture<F: Scalar>(
    sums: &SpectralSums<F>,
    zero_tol: F,
) -> (Bound<F>, Bound<F>) {
    if sums.s_minus <= zero_tol {
        return (Bound::degenerate(), Bound::degenerate());
    }
    let ratio = sums.s_plus / sums.s_minus;
    (Bound::fine(ratio), Bound::fine(F::one() + ratio))
}

/// The classical auxiliary bounds of the comparison table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(bound = "F: Serialize")]
pub struct AuxiliaryBounds<F> {
    /// χ ≥ 1 + μ₁/(n − μ₁).
    pub cvetkovic: Bound<F>,
    /// ω ≥ 1 + 2m/(n² − 2m).
    pub myers_liu: Bound<F>,
    /// χ ≥ 1 + μ₁²/(2m − μ₁²).
    pub edwards_elphick: Bound<F>,
    /// ω ≥ 1 + (μ₁² + μ₂²)/(2m − μ₁² − μ₂²).
    pub bollobas_nikiforov: Bound<F>,
    /// χ ≤ 1 + μ₁.
    pub wilf_upper: Bound<F>,
}

/// Computes the five auxiliary bounds. An edgeless graph degenerates all of
/// them; otherwise each bound degenerates individually when its denominator
/// falls below zero_tol (e.g. Bollobás–Nikiforov on K₂).
pub fn auxiliary_bounds<F: Scalar>(s: &Spectrum<F>, n: usize, m: usize) -> AuxiliaryBounds<F> {
    if m == 0 || n == 0 {
        return AuxiliaryBounds {
            cvetkovic: Bound::degenerate(),
            myers_liu: Bound::degenerate(),
            edwards_elphick: Bound::degenerate(),
            bollobas_nikiforov: Bound::degenerate(),
            wilf_upper: Bound::degenerate(),
        };
    }
    let zero_tol = s.zero_tol();
    let nf = F::cast_usize(n);
    let two_m = F::cast_usize(2 * m);
    let mu1 = s.mu_max();
    let mu2 = if n >= 2 { s.values()[1] } else { F::zero() };

    let guarded = |numerator: F, denominator: F| {
        if denominator > zero_tol {
            Bound::fine(F::one() + numerator / denominator)
        } else {
            Bound::degenerate()
        }
    };
    AuxiliaryBounds {
        cvetkovic: guarded(mu1, nf - mu1),
        myers_liu: guarded(two_m, nf * nf - two_m),
        edwards_elphick: guarded(mu1 * mu1, two_m - mu1 * mu1),
        bollobas_nikiforov: guarded(mu1 * mu1 + mu2 * mu2, two_m - mu1 * mu1 - mu2 * mu2),
        wilf_upper: Bound::fine(F::one() + mu1),
    }
}

/// The independence-number bound χ ≤ n − α + 1, returned as the classical
/// lower-bound companion value n − α + 1 ≥ χ.
pub fn alpha_bound<F: Scalar>(n: usize, alpha: u32) -> F {
    F::cast_usize(n) - F::cast(alpha as f64) + F::one()
}

/// Diagonal-scaling heuristic: χ ≥ 1 + μ₁(D^{−1/2} A D^{−1/2}) for any
/// positive diagonal D with A + D positive semidefinite.
///
/// Starts at D = −μ_n·I — which reproduces the Hoffman bound exactly — and
/// hill-climbs one coordinate at a time over the multiplicative factor grid
/// {0.8, 0.9, 1.1, 1.25}, accepting a move only when the scaled matrix stays
/// feasible (μ_min(A + D) ≥ −zero_tol) and the objective improves. Stops
/// after a full sweep without improvement or `barnes_sweeps` sweeps.
///
/// Requires at least one edge (so that μ_n < 0).
pub fn barnes_heuristic<F: Scalar>(
    a: &Matrix<F>,
    s: &Spectrum<F>,
    tol: &Tolerances<F>,
) -> Result<F, LinalgError> {
    let n = a.n();
    let mu_n = s.mu_min();
    debug_assert!(mu_n < -s.zero_tol(), "caller must ensure the graph has edges");

    let objective = |d: &[F]| -> Result<F, LinalgError> {
        let scaled = Matrix::from_fn(n, |i, j| a[(i, j)] / (d[i] * d[j]).sqrt());
        Ok(eig_symmetric(&scaled, tol)?.mu_max())
    };
    let feasible = |d: &[F]| -> Result<bool, LinalgError> {
        let shifted = Matrix::from_fn(n, |i, j| if i == j { d[i] } else { a[(i, j)] });
        let spectrum = eig_symmetric(&shifted, tol)?;
        Ok(spectrum.mu_min() >= -spectrum.zero_tol())
    };

    let mut d = vec![-mu_n; n];
    let mut best = objective(&d)?;
    let factors = [F::cast(0.8), F::cast(0.9), F::cast(1.1), F::cast(1.25)];
    for _sweep in 0..tol.barnes_sweeps {
        let mut improved = false;
        for i in 0..n {
            for &factor in &factors {
                let saved = d[i];
                d[i] = saved * factor;
                let better = feasible(&d)? && {
                    let candidate = objective(&d)?;
                    let margin = F::cast(1e-12) * (F::one() + best.abs());
                    if candidate > best + margin {
                        best = candidate;
                        true
                    } else {
                        false
                    }
                };
                if better {
                    improved = true;
                } else {
                    d[i] = saved;
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok(F::one() + best)
}

/// Bounds recomputed on the spectrum of the Schur product W*A.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(bound = "F: Serialize")]
pub struct WeightedBounds<F> {
    pub gen_hoffman: Bound<F>,
    pub gen_hoffman_best_m: usize,
    pub weaker: Bound<F>,
    pub conjecture: Bound<F>,
}

/// Generalized Hoffman and S⁺/S⁻ bounds over the weighted matrix W*A.
/// With W = J this reproduces the unweighted values exactly (J*A = A
/// entrywise, so the same spectrum feeds the same formulas).
pub fn weighted_bounds<F: Scalar>(
    w: &WeightMatrix<F>,
    g: &Graph,
    tol: &Tolerances<F>,
) -> Result<WeightedBounds<F>, BoundsError> {
    let wa = schur_product(w, &g.adjacency_matrix())?;
    let s = eig_symmetric(&wa, tol)?;
    let (gen_hoffman, gen_hoffman_best_m) = generalized_hoffman(&s);
    let sums = s.spectral_sums(&s.inertia());
    let (weaker, conjecture) = weaker_and_conjecture(&sums, s.zero_tol());
    Ok(WeightedBounds {
        gen_hoffman,
        gen_hoffman_best_m,
        weaker,
        conjecture,
    })
}

/// Outcome of the weight search: the best weighted bounds found and the
/// witness weight matrix.
#[derive(Debug, Clone)]
pub struct OptimizedWeights<F> {
    pub weights: WeightMatrix<F>,
    pub bounds: WeightedBounds<F>,
    /// Spectrum evaluations spent (== the requested budget unless the graph
    /// is edgeless).
    pub evaluations: u64,
}

/// Random-restart hill-climbing over edge-supported symmetric weight
/// matrices, maximizing the weighted generalized Hoffman bound.
///
/// The first candidate is always W = J, so the result never falls below the
/// unweighted baseline. Each step perturbs a single edge weight; every
/// spectrum evaluation (including the baseline) counts against `budget`.
/// Restarts draw fresh random edge weights every 25 steps.
pub fn optimize_w<F: Scalar>(
    g: &Graph,
    budget: u64,
    seed: u64,
    tol: &Tolerances<F>,
) -> Result<OptimizedWeights<F>, BoundsError> {
    use crate::linalg::{seeded_rng, symmetric_uniform, unit_uniform};

    let n = g.n();
    let edges = g.edges();
    let baseline_w = WeightMatrix::ones(n);
    let baseline = weighted_bounds(&baseline_w, g, tol)?;
    let mut best_w = baseline_w;
    let mut best = baseline;
    let mut evaluations: u64 = 1;

    if edges.is_empty() || budget <= 1 {
        return Ok(OptimizedWeights {
            weights: best_w,
            bounds: best,
            evaluations,
        });
    }

    let mut rng = seeded_rng(seed);
    // Edge weights of the current climber; J is all-ones.
    let mut current: Vec<F> = vec![F::one(); edges.len()];
    let mut current_value = best.gen_hoffman.value;
    const RESTART_PERIOD: u64 = 25;
    let mut steps_since_restart: u64 = 0;

    let evaluate = |weights: &[F], tol: &Tolerances<F>| -> Result<WeightedBounds<F>, BoundsError> {
        let mut m = Matrix::zeros(n);
        for (&(u, v), &w) in edges.iter().zip(weights) {
            m[((u - 1) as usize, (v - 1) as usize)] = w;
            m[((v - 1) as usize, (u - 1) as usize)] = w;
        }
        let wm = WeightMatrix::from_matrix(m).expect("edge weights are symmetric");
        weighted_bounds(&wm, g, tol)
    };

    while evaluations < budget {
        if steps_since_restart == RESTART_PERIOD {
            for w in &mut current {
                *w = symmetric_uniform(&mut rng);
            }
            steps_since_restart = 0;
            let fresh = evaluate(&current, tol)?;
            evaluations += 1;
            current_value = fresh.gen_hoffman.value;
            if fresh.gen_hoffman.value > best.gen_hoffman.value {
                best = fresh;
                best_w = {
                    let mut m = Matrix::zeros(n);
                    for (&(u, v), &w) in edges.iter().zip(&current) {
                        m[((u - 1) as usize, (v - 1) as usize)] = w;
                        m[((v - 1) as usize, (u - 1) as usize)] = w;
                    }
                    WeightMatrix::from_matrix(m).expect("edge weights are symmetric")
                };
            }
            continue;
        }
        // One step: nudge a single random edge weight.
        let pick = (unit_uniform::<F>(&mut rng).to_f64().unwrap_or(0.0)
            * edges.len() as f64) as usize;
        let pick = pick.min(edges.len() - 1);
        let saved = current[pick];
        current[pick] = saved + symmetric_uniform::<F>(&mut rng) * F::cast(0.5);
        let candidate = evaluate(&current, tol)?;
        evaluations += 1;
        steps_since_restart += 1;
        if candidate.gen_hoffman.value > current_value {
            current_value = candidate.gen_hoffman.value;
            if candidate.gen_hoffman.value > best.gen_hoffman.value {
                best = candidate;
                best_w = {
                    let mut m = Matrix::zeros(n);
                    for (&(u, v), &w) in edges.iter().zip(&current) {
                        m[((u - 1) as usize, (v - 1) as usize)] = w;
                        m[((v - 1) as usize, (u - 1) as usize)] = w;
                    }
                    WeightMatrix::from_matrix(m).expect("edge weights are symmetric")
                };
            }
        } else {
            current[pick] = saved;
        }
    }

    Ok(OptimizedWeights {
        weights: best_w,
        bounds: best,
        evaluations,
    })
}

/// Options controlling which optional sections a [`bound_report`] includes.
#[derive(Debug, Clone, Copy, Default)]
pub struct BoundOptions<'w, F> {
    /// Compute exact χ and α with this node budget.
    pub exact_budget: Option<u64>,
    /// Run the diagonal-scaling heuristic.
    pub barnes: bool,
    /// Add Schur-weighted variants for this weight matrix.
    pub weights: Option<&'w WeightMatrix<F>>,
}

/// The full bound table for one graph.
#[derive(Debug, Clone, Serialize)]
#[serde(bound = "F: Serialize")]
pub struct BoundReport<F> {
    pub n: usize,
    pub m: usize,
    pub mu_1: F,
    pub mu_n: F,
    pub s_plus: F,
    pub s_minus: F,
    pub hoffman: Bound<F>,
    pub gen_hoffman: Bound<F>,
    pub gen_hoffman_best_m: usize,
    pub weaker: Bound<F>,
    pub conjecture: Bound<F>,
    pub cvetkovic: Bound<F>,
    pub myers_liu: Bound<F>,
    pub edwards_elphick: Bound<F>,
    pub bollobas_nikiforov: Bound<F>,
    pub wilf_upper: Bound<F>,
    /// n − α + 1, present when α was computed exactly.
    pub alpha_bound: Option<F>,
    pub barnes: Option<F>,
    pub chi_exact: Option<u32>,
    /// [lower, upper] bracket when the χ search ran out of budget.
    pub chi_bracket: Option<(u32, u32)>,
    pub alpha_exact: Option<u32>,
    /// [lower, upper] bracket when the α search ran out of budget.
    pub alpha_bracket: Option<(u32, u32)>,
    pub weighted: Option<WeightedBounds<F>>,
}

/// Computes every bound for `g`, with optional exact values, the diagonal
/// heuristic, and weighted variants per `opts`.
pub fn bound_report<F: Scalar>(
    g: &Graph,
    opts: &BoundOptions<'_, F>,
    tol: &Tolerances<F>,
) -> Result<BoundReport<F>, BoundsError> {
    let n = g.n();
    let m = g.m();
    let a = g.adjacency_matrix::<F>();
    let s = eig_symmetric(&a, tol)?;
    let inertia = s.inertia();
    let sums = s.spectral_sums(&inertia);

    let hoffman_bound = hoffman(&s);
    let (gen_hoffman, gen_hoffman_best_m) = generalized_hoffman(&s);
    let (weaker, conjecture) = weaker_and_conjecture(&sums, s.zero_tol());
    let aux = auxiliary_bounds(&s, n, m);

    let mut chi_exact = None;
    let mut chi_bracket = None;
    let mut alpha_exact = None;
    let mut alpha_bracket = None;
    let mut alpha_value = None;
    if let Some(budget) = opts.exact_budget {
        match chromatic_number(g, budget) {
            ChromaticResult::Exact { chi, .. } => chi_exact = Some(chi),
            ChromaticResult::BudgetExceeded { lower, upper, .. } => {
                chi_bracket = Some((lower, upper));
            }
        }
        match independence_number(g, budget) {
            AlphaResult::Exact { alpha, .. } => {
                alpha_exact = Some(alpha);
                alpha_value = Some(alpha_bound::<F>(n, alpha));
            }
            AlphaResult::BudgetExceeded { lower, upper, .. } => {
                alpha_bracket = Some((lower, upper));
            }
        }
    }

    let barnes = if opts.barnes && m > 0 {
        Some(barnes_heuristic(&a, &s, tol)?)
    } else {
        None
    };

    let weighted = match opts.weights {
        Some(w) => Some(weighted_bounds(w, g, tol)?),
        None => None,
    };

    let (mu_1, mu_n) = if n > 0 {
        (s.mu_max(), s.mu_min())
    } else {
        (F::zero(), F::zero())
    };

    Ok(BoundReport {
        n,
        m,
        mu_1,
        mu_n,
        s_plus: sums.s_plus,
        s_minus: sums.s_minus,
        hoffman: hoffman_bound,
        gen_hoffman,
        gen_hoffman_best_m,
        weaker,
        conjecture,
        cvetkovic: aux.cvetkovic,
        myers_liu: aux.myers_liu,
        edwards_elphick: aux.edwards_elphick,
        bollobas_nikiforov: aux.bollobas_nikiforov,
        wilf_upper: aux.wilf_upper,
        alpha_bound: alpha_value,
        barnes,
        chi_exact,
        chi_bracket,
        alpha_exact,
        alpha_bracket,
        weighted,
    })
}
