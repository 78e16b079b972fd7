//! Experiment harness: the named-graph corpus table, random-graph sweeps,
//! and conjecture counterexample searches, with CSV/JSON-lines reporting.
//!
//! Conjecture soundness (χ ≥ 1 + S⁺/S⁻) is treated as a falsifiable
//! property: a violation is a reported finding with a re-checkable witness,
//! never a panic. Every scan is deterministic given (spec, seed) — trial i
//! uses seed + i, and parallel results are merged in trial order — so the
//! CSV output is byte-for-byte reproducible.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    bound_report, weaker_and_conjecture, BoundOptions, BoundReport, BoundsError,
};
use crate::config::Tolerances;
use crate::exact::{chromatic_number, ChromaticResult};
use crate::graphs::{gnp, Family, Graph, GraphError};
use crate::linalg::{eig_symmetric, LinalgError};

/// Errors from harness operations.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("output failed: {0}")]
    Io(#[from] std::io::Error),
}

// ---------------------------------------------------------------------------
// Named corpus
// ---------------------------------------------------------------------------

/// The d-dimensional hypercube Q_d: vertices 1..2^d, edges between bitmasks
/// at Hamming distance 1. Bipartite, so χ = 2 for d ≥ 1.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let mut edges = Vec::new();
    for u in 0..n {
        for bit in 0..d {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u as u32 + 1, v as u32 + 1));
            }
        }
    }
    Graph::from_edge_list(n, &edges, format!("hypercube({d})"))
        .expect("hypercube edges are valid by construction")
}

/// The Coxeter graph: three heptagons with skips 1, 2, 3 plus a 7-vertex hub
/// joined by spokes to the matching ring vertices. 3-regular, n = 28,
/// m = 42, girth 7, χ = 3, ω = 2.
pub fn coxeter() -> Graph {
    let hub = |j: u32| j + 1; // 1..=7
    let ring = |r: u32, j: u32| 8 + 7 * r + j; // rings 0,1,2 → 8..=28
    let mut edges = Vec::new();
    for (r, skip) in [(0u32, 1u32), (1, 2), (2, 3)] {
        for j in 0..7 {
            edges.push((ring(r, j), ring(r, (j + skip) % 7)));
            edges.push((hub(j), ring(r, j)));
        }
    }
    Graph::from_edge_list(28, &edges, "coxeter")
        .expect("coxeter edges are valid by construction")
}

/// The bundled substitute corpus of standard named graphs, in fixed order.
/// All members are small enough for exact χ and α under the default budget.
pub fn named_corpus() -> Vec<Graph> {
    let family = |spec: &str| {
        Family::parse(spec)
            .expect("corpus family specs are valid")
            .generate(None)
            .expect("corpus families are deterministic")
    };
    vec![
        family("petersen"),
        coxeter(),
        family("kneser:6,2"),
        family("kneser:7,3"),
        family("cycle:5"),
        family("cycle:6"),
        family("cycle:7"),
        family("barbell:4"),
        family("barbell:8"),
        hypercube(3),
        hypercube(4),
        family("hadamard:4"),
        family("complete:5"),
        family("multipartite:3,3,3"),
    ]
}

/// One corpus-table row: the full bound report plus comparison flags, or an
/// isolated error marker when the graph could not be processed.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub report: Option<BoundReport<f64>>,
    /// gen_hoffman > hoffman beyond the ordering tolerance.
    pub gen_gt_hoffman: Option<bool>,
    /// conjecture > hoffman beyond the ordering tolerance.
    pub conj_gt_hoffman: Option<bool>,
    pub error: Option<String>,
}

/// Aggregate percentages over the non-error rows of a corpus run.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub rows: usize,
    pub pct_gen_gt_hoffman: f64,
    pub pct_conj_gt_hoffman: f64,
}

impl CorpusSummary {
    pub fn from_rows(rows: &[CorpusRow]) -> CorpusSummary {
        let scored: Vec<&CorpusRow> = rows.iter().filter(|r| r.error.is_none()).collect();
        let pct = |f: fn(&&CorpusRow) -> bool| {
            if scored.is_empty() {
                0.0
            } else {
                100.0 * scored.iter().filter(|r| f(r)).count() as f64 / scored.len() as f64
            }
        };
        CorpusSummary {
            rows: rows.len(),
            pct_gen_gt_hoffman: pct(|r| r.gen_gt_hoffman == Some(true)),
            pct_conj_gt_hoffman: pct(|r| r.conj_gt_hoffman == Some(true)),
        }
    }
}

/// Computes one bound-table row per graph, in input order. Failures are
/// isolated into the row's `error` field and never abort the run.
pub fn corpus_run(
    graphs: &[Graph],
    exact_budget: Option<u64>,
    tol: &Tolerances<f64>,
) -> Vec<CorpusRow> {
    graphs
        .iter()
        .map(|g| {
            let mut row = CorpusRow {
                name: g.name().to_string(),
                n: g.n(),
                m: g.m(),
                report: None,
                gen_gt_hoffman: None,
                conj_gt_hoffman: None,
                error: None,
            };
            if g.n() == 0 {
                row.error = Some("graph has no vertices".to_string());
                return row;
            }
            let opts = BoundOptions {
                exact_budget,
                ..BoundOptions::default()
            };
            match bound_report(g, &opts, tol) {
                Ok(report) => {
                    row.gen_gt_hoffman =
                        Some(report.gen_hoffman.value > report.hoffman.value + tol.ordering_tol);
                    row.conj_gt_hoffman =
                        Some(report.conjecture.value > report.hoffman.value + tol.ordering_tol);
                    row.report = Some(report);
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Random sweep
// ---------------------------------------------------------------------------

/// Bound values for one G(n, p) trial; trial i draws from seed + i.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTrial {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub hoffman: f64,
    pub gen_hoffman: f64,
    pub weaker: f64,
    pub conjecture: f64,
}

/// Per-trial rows plus their means and the Bollobás reference value
/// (1/2)·n/log_b(n) with b = 1/(1−p); the o(1) term is dropped, so this is
/// reported for orientation only, never as a bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub rows: Vec<SweepTrial>,
    pub mean_hoffman: f64,
    pub mean_gen_hoffman: f64,
    pub mean_conjecture: f64,
    pub bollobas_formula: f64,
}

/// Runs `trials` independent G(n, p) draws (trial i seeded with seed + i),
/// computing the spectral bounds for each and their means. Trials run in
/// parallel; rows are merged in trial order, so output is deterministic.
pub fn random_sweep(
    n: usize,
    p: f64,
    trials: usize,
    seed: u64,
    tol: &Tolerances<f64>,
) -> Result<SweepSummary, HarnessError> {
    if trials == 0 {
        return Err(HarnessError::InvalidParameter(
            "trials must be at least 1".to_string(),
        ));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(HarnessError::InvalidParameter(format!(
            "p must lie strictly between 0 and 1, got {p}"
        )));
    }
    if n < 2 {
        return Err(HarnessError::InvalidParameter(
            "sweep needs n >= 2 (the Bollobás formula divides by log n)".to_string(),
        ));
    }
    let rows: Vec<SweepTrial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let trial_seed = seed + i as u64;
            let g = gnp(n, p, trial_seed);
            let a = g.adjacency_matrix::<f64>();
            let s = eig_symmetric(&a, tol)?;
            let sums = s.spectral_sums(&s.inertia());
            let zero_tol = tol.zero_tol(g.n(), a.max_abs());
            let hoffman = crate::bounds::hoffman(&s);
            let (gen_hoffman, _) = crate::bounds::generalized_hoffman(&s);
            let (weaker, conjecture) = weaker_and_conjecture(&sums, zero_tol);
            Ok(SweepTrial {
                trial: i,
                seed: trial_seed,
                n: g.n(),
                m: g.m(),
                hoffman: hoffman.value,
                gen_hoffman: gen_hoffman.value,
                weaker: weaker.value,
                conjecture: conjecture.value,
            })
        })
        .collect::<Result<_, HarnessError>>()?;
    let mean = |f: fn(&SweepTrial) -> f64| rows.iter().map(f).sum::<f64>() / rows.len() as f64;
    let b = 1.0 / (1.0 - p);
    let bollobas_formula = 0.5 * (n as f64) * b.ln() / (n as f64).ln();
    Ok(SweepSummary {
        n,
        p,
        seed,
        mean_hoffman: mean(|r| r.hoffman),
        mean_gen_hoffman: mean(|r| r.gen_hoffman),
        mean_conjecture: mean(|r| r.conjecture),
        bollobas_formula,
        rows,
    })
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

/// Verdict for one scanned graph. A WILF-VIOLATION (S⁺/S⁻ > μ₁) would
/// disprove the conjecture outright, so it takes precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "CONJECTURE-VIOLATION")]
    ConjectureViolation,
    #[serde(rename = "WILF-VIOLATION")]
    WilfViolation,
    #[serde(rename = "budget-exceeded")]
    BudgetExceeded,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Consistent => "consistent",
            Verdict::ConjectureViolation => "CONJECTURE-VIOLATION",
            Verdict::WilfViolation => "WILF-VIOLATION",
            Verdict::BudgetExceeded => "budget-exceeded",
        };
        f.write_str(s)
    }
}

/// Classifies one graph's scan outcome.
///
/// WILF-VIOLATION iff S⁺/S⁻ > μ₁ + exactness_tol (checked first);
/// CONJECTURE-VIOLATION iff conjecture > χ + exactness_tol with χ exact.
/// When the χ search ran out of budget, conjecture ≤ certified-lower still
/// proves consistency; only an undecided comparison is budget-exceeded.
pub fn classify(
    weaker: f64,
    weaker_degenerate: bool,
    conjecture: f64,
    mu_1: f64,
    chi: &ChromaticResult,
    exactness_tol: f64,
) -> Verdict {
    if !weaker_degenerate && weaker > mu_1 + exactness_tol {
        return Verdict::WilfViolation;
    }
    match chi.exact() {
        Some(chi_exact) => {
            if conjecture > chi_exact as f64 + exactness_tol {
                Verdict::ConjectureViolation
            } else {
                Verdict::Consistent
            }
        }
        None => {
            if conjecture <= chi.lower() as f64 + exactness_tol {
                Verdict::Consistent
            } else {
                Verdict::BudgetExceeded
            }
        }
    }
}

/// Re-checkable evidence embedded in a reported finding: the graph itself,
/// its computed spectrum, and a proper coloring witnessing chi_upper.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub edges: Vec<(u32, u32)>,
    pub eigenvalues: Vec<f64>,
    pub coloring: Vec<u32>,
}

/// Scan record for one graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchFinding {
    /// Stable identifier, e.g. "gnp-10-0.85-17" or "exhaustive-n5-mask-123".
    pub id: String,
    /// Trial seed for randomized scans; absent for exhaustive enumeration.
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub mu_1: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    pub weaker: f64,
    pub conjecture: f64,
    pub chi_lower: u32,
    pub chi_upper: u32,
    pub chi_exact: Option<u32>,
    pub verdict: Verdict,
    /// Present on every non-consistent finding.
    pub witness: Option<Witness>,
}

/// What to scan: seeded G(n, p) samples or every graph on ≤ max_n vertices
/// (by edge-subset enumeration; isomorphic duplicates are acceptable since
/// verdicts are per-graph).
#[derive(Debug, Clone, PartialEq)]
pub enum ScanSpec {
    Gnp { n: usize, p: f64, trials: usize },
    Exhaustive { max_n: usize },
}

/// Aggregate verdict counts plus the bipartite cross-check: every sampled
/// bipartite graph with an edge must have conjecture = 2 (its spectrum is
/// symmetric, so S⁺ = S⁻); the max deviation over those graphs is recorded.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanSummary {
    pub scanned: usize,
    pub consistent: usize,
    pub conjecture_violations: usize,
    pub wilf_violations: usize,
    pub budget_exceeded: usize,
    pub bipartite_checked: usize,
    pub bipartite_max_deviation: f64,
}

impl ScanSummary {
    pub fn has_violation(&self) -> bool {
        self.conjecture_violations > 0 || self.wilf_violations > 0
    }
}

/// Non-consistent findings plus aggregate counts for a whole scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanOutcome {
    pub findings: Vec<SearchFinding>,
    pub summary: ScanSummary,
}

/// Work descriptor for one graph of a scan.
enum ScanItem {
    Gnp { index: usize, seed: u64 },
    Mask { n: usize, mask: u64 },
}

/// The C(n,2) vertex pairs in lexicographic order (1,2), (1,3), …, (n−1,n) —
/// the same order gnp consumes its random draws in; exhaustive enumeration
/// maps edge-subset bit i to pair i in this order.
fn lex_pairs(n: usize) -> Vec<(u32, u32)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 1..=n as u32 {
        for v in (u + 1)..=n as u32 {
            pairs.push((u, v));
        }
    }
    pairs
}

fn mask_graph(n: usize, mask: u64, pairs: &[(u32, u32)]) -> Graph {
    let edges: Vec<(u32, u32)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edge_list(n, &edges, format!("exhaustive-n{n}-mask-{mask}"))
        .expect("mask edges are valid by construction")
}

/// Two-colorability check by breadth-first search over all components.
fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &g.adjacency_lists()[u] {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

fn scan_one(
    g: &Graph,
    id: String,
    seed: Option<u64>,
    budget: u64,
    tol: &Tolerances<f64>,
) -> Result<SearchFinding, HarnessError> {
    let a = g.adjacency_matrix::<f64>();
    let s = eig_symmetric(&a, tol)?;
    let sums = s.spectral_sums(&s.inertia());
    let zero_tol = tol.zero_tol(g.n(), a.max_abs());
    let (weaker, conjecture) = weaker_and_conjecture(&sums, zero_tol);
    let mu_1 = s.mu_max();
    let chi = chromatic_number(g, budget);
    let verdict = classify(
        weaker.value,
        weaker.degenerate,
        conjecture.value,
        mu_1,
        &chi,
        tol.exactness_tol,
    );
    let witness = if verdict == Verdict::Consistent {
        None
    } else {
        Some(Witness {
            edges: g.edges().to_vec(),
            eigenvalues: s.values().to_vec(),
            coloring: chi.coloring().assignment().to_vec(),
        })
    };
    Ok(SearchFinding {
        id,
        seed,
        n: g.n(),
        m: g.m(),
        mu_1,
        s_plus: sums.s_plus,
        s_minus: sums.s_minus,
        weaker: weaker.value,
        conjecture: conjecture.value,
        chi_lower: chi.lower(),
        chi_upper: chi.upper(),
        chi_exact: chi.exact(),
        verdict,
        witness,
    })
}

fn build_graph(item: &ScanItem, spec: &ScanSpec, pairs_by_n: &[Vec<(u32, u32)>]) -> Graph {
    match (item, spec) {
        (ScanItem::Gnp { seed, .. }, ScanSpec::Gnp { n, p, .. }) => gnp(*n, *p, *seed),
        (ScanItem::Mask { n, mask }, _) => mask_graph(*n, *mask, &pairs_by_n[*n]),
        _ => unreachable!("scan item kind matches its spec"),
    }
}

fn item_id(item: &ScanItem, spec: &ScanSpec) -> String {
    match (item, spec) {
        (ScanItem::Gnp { index, .. }, ScanSpec::Gnp { n, p, .. }) => format!("gnp-{n}-{p}-{index}"),
        (ScanItem::Mask { n, mask }, _) => format!("exhaustive-n{n}-mask-{mask}"),
        _ => unreachable!("scan item kind matches its spec"),
    }
}

/// Runs a counterexample scan, invoking `row_hook` once per scanned graph in
/// deterministic order (trial order / enumeration order), and returns the
/// non-consistent findings plus aggregate counts. Graphs are processed in
/// parallel chunks; the merge order never depends on scheduling.
pub fn counterexample_scan_with<H: FnMut(&SearchFinding)>(
    spec: &ScanSpec,
    seed: u64,
    budget: u64,
    tol: &Tolerances<f64>,
    mut row_hook: H,
) -> Result<ScanOutcome, HarnessError> {
    const CHUNK: usize = 256;
    let items: Vec<ScanItem> = match spec {
        ScanSpec::Gnp { n, p, trials } => {
            if *trials == 0 {
                return Err(HarnessError::InvalidParameter(
                    "trials must be at least 1".to_string(),
                ));
            }
            if !(*p >= 0.0 && *p <= 1.0) {
                return Err(HarnessError::InvalidParameter(format!(
                    "p must lie in [0, 1], got {p}"
                )));
            }
            if *n == 0 {
                return Err(HarnessError::InvalidParameter(
                    "n must be at least 1".to_string(),
                ));
            }
            (0..*trials)
                .map(|i| ScanItem::Gnp {
                    index: i,
                    seed: seed + i as u64,
                })
                .collect()
        }
        ScanSpec::Exhaustive { max_n } => {
            if !(1..=7).contains(max_n) {
                return Err(HarnessError::InvalidParameter(
                    "exhaustive enumeration supports max_n in 1..=7".to_string(),
                ));
            }
            let mut items = Vec::new();
            for n in 1..=*max_n {
                let bits = n * (n - 1) / 2;
                for mask in 0..(1u64 << bits) {
                    items.push(ScanItem::Mask { n, mask });
                }
            }
            items
        }
    };
    let pairs_by_n: Vec<Vec<(u32, u32)>> = match spec {
        ScanSpec::Exhaustive { max_n } => (0..=*max_n).map(lex_pairs).collect(),
        ScanSpec::Gnp { .. } => Vec::new(),
    };

    let mut findings = Vec::new();
    let mut summary = ScanSummary {
        scanned: 0,
        consistent: 0,
        conjecture_violations: 0,
        wilf_violations: 0,
        budget_exceeded: 0,
        bipartite_checked: 0,
        bipartite_max_deviation: 0.0,
    };
    for chunk in items.chunks(CHUNK) {
        let rows: Vec<(SearchFinding, bool)> = chunk
            .par_iter()
            .map(|item| {
                let g = build_graph(item, spec, &pairs_by_n);
                let id = item_id(item, spec);
                let trial_seed = match item {
                    ScanItem::Gnp { seed, .. } => Some(*seed),
                    ScanItem::Mask { .. } => None,
                };
                let bipartite = g.m() >= 1 && is_bipartite(&g);
                scan_one(&g, id, trial_seed, budget, tol).map(|f| (f, bipartite))
            })
            .collect::<Result<_, HarnessError>>()?;
        for (finding, bipartite) in rows {
            summary.scanned += 1;
            match finding.verdict {
                Verdict::Consistent => summary.consistent += 1,
                Verdict::ConjectureViolation => summary.conjecture_violations += 1,
                Verdict::WilfViolation => summary.wilf_violations += 1,
                Verdict::BudgetExceeded => summary.budget_exceeded += 1,
            }
            if bipartite {
                summary.bipartite_checked += 1;
                let dev = (finding.conjecture - 2.0).abs();
                if dev > summary.bipartite_max_deviation {
                    summary.bipartite_max_deviation = dev;
                }
            }
            row_hook(&finding);
            if finding.verdict != Verdict::Consistent {
                findings.push(finding);
            }
        }
    }
    Ok(ScanOutcome { findings, summary })
}

/// [`counterexample_scan_with`] without a per-row hook.
pub fn counterexample_scan(
    spec: &ScanSpec,
    seed: u64,
    budget: u64,
    tol: &Tolerances<f64>,
) -> Result<ScanOutcome, HarnessError> {
    counterexample_scan_with(spec, seed, budget, tol, |_| {})
}

/// Re-verifies a finding from its embedded witness in a fresh computation:
/// rebuilds the graph from the edge list, checks the witness coloring is
/// proper, recomputes spectrum and bounds, and reproduces the verdict.
pub fn recheck_finding(
    finding: &SearchFinding,
    budget: u64,
    tol: &Tolerances<f64>,
) -> Result<bool, HarnessError> {
    let witness = match &finding.witness {
        Some(w) => w,
        None => return Ok(finding.verdict == Verdict::Consistent),
    };
    let g = Graph::from_edge_list(finding.n, &witness.edges, finding.id.clone())?;
    if crate::exact::Coloring::try_new(&g, witness.coloring.clone()).is_err() {
        return Ok(false);
    }
    let fresh = scan_one(&g, finding.id.clone(), finding.seed, budget, tol)?;
    let close = |a: f64, b: f64| (a - b).abs() <= tol.exactness_tol;
    let spectrum_matches = match &fresh.witness {
        Some(w) => {
            w.eigenvalues.len() == witness.eigenvalues.len()
                && w.eigenvalues
                    .iter()
                    .zip(&witness.eigenvalues)
                    .all(|(a, b)| close(*a, *b))
        }
        None => true,
    };
    Ok(fresh.verdict == finding.verdict
        && close(fresh.conjecture, finding.conjecture)
        && close(fresh.weaker, finding.weaker)
        && close(fresh.mu_1, finding.mu_1)
        && spectrum_matches)
}

// ---------------------------------------------------------------------------
// CSV / JSON-lines reporting
// ---------------------------------------------------------------------------

fn fmt_opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Corpus CSV: header plus one row per graph, full-precision numbers, fixed
/// column order (see the repository README).
pub fn write_corpus_csv<W: Write>(rows: &[CorpusRow], out: W) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "name",
        "n",
        "m",
        "mu_1",
        "mu_n",
        "s_plus",
        "s_minus",
        "hoffman",
        "gen_hoffman",
        "gen_hoffman_best_m",
        "weaker",
        "conjecture",
        "cvetkovic",
        "myers_liu",
        "edwards_elphick",
        "bollobas_nikiforov",
        "wilf_upper",
        "alpha_bound",
        "chi",
        "chi_lower",
        "chi_upper",
        "alpha",
        "alpha_lower",
        "alpha_upper",
        "degenerate",
        "gen_gt_hoffman",
        "conj_gt_hoffman",
        "error",
    ])?;
    for row in rows {
        match &row.report {
            Some(r) => {
                let degenerate: Vec<&str> = [
                    ("hoffman", r.hoffman.degenerate),
                    ("gen_hoffman", r.gen_hoffman.degenerate),
                    ("weaker", r.weaker.degenerate),
                    ("conjecture", r.conjecture.degenerate),
                    ("cvetkovic", r.cvetkovic.degenerate),
                    ("myers_liu", r.myers_liu.degenerate),
                    ("edwards_elphick", r.edwards_elphick.degenerate),
                    ("bollobas_nikiforov", r.bollobas_nikiforov.degenerate),
                    ("wilf_upper", r.wilf_upper.degenerate),
                ]
                .iter()
                .filter(|(_, d)| *d)
                .map(|(name, _)| *name)
                .collect();
                let (chi_lower, chi_upper) = match (r.chi_exact, r.chi_bracket) {
                    (Some(chi), _) => (Some(chi), Some(chi)),
                    (None, Some((lo, hi))) => (Some(lo), Some(hi)),
                    (None, None) => (None, None),
                };
                let (alpha_lower, alpha_upper) = match (r.alpha_exact, r.alpha_bracket) {
                    (Some(a), _) => (Some(a), Some(a)),
                    (None, Some((lo, hi))) => (Some(lo), Some(hi)),
                    (None, None) => (None, None),
                };
                w.write_record([
                    row.name.clone(),
                    row.n.to_string(),
                    row.m.to_string(),
                    r.mu_1.to_string(),
                    r.mu_n.to_string(),
                    r.s_plus.to_string(),
                    r.s_minus.to_string(),
                    r.hoffman.value.to_string(),
                    r.gen_hoffman.value.to_string(),
                    r.gen_hoffman_best_m.to_string(),
                    r.weaker.value.to_string(),
                    r.conjecture.value.to_string(),
                    r.cvetkovic.value.to_string(),
                    r.myers_liu.value.to_string(),
                    r.edwards_elphick.value.to_string(),
                    r.bollobas_nikiforov.value.to_string(),
                    r.wilf_upper.value.to_string(),
                    fmt_opt(r.alpha_bound),
                    fmt_opt(r.chi_exact),
                    fmt_opt(chi_lower),
                    fmt_opt(chi_upper),
                    fmt_opt(r.alpha_exact),
                    fmt_opt(alpha_lower),
                    fmt_opt(alpha_upper),
                    degenerate.join(";"),
                    fmt_opt(row.gen_gt_hoffman),
                    fmt_opt(row.conj_gt_hoffman),
                    String::new(),
                ])?;
            }
            None => {
                let mut record = vec![row.name.clone(), row.n.to_string(), row.m.to_string()];
                record.extend(std::iter::repeat_n(String::new(), 24));
                record.push(row.error.clone().unwrap_or_default());
                w.write_record(&record)?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Sweep CSV: one `trial` row per draw plus a final `mean` row carrying the
/// means and the Bollobás reference value.
pub fn write_sweep_csv<W: Write>(summary: &SweepSummary, out: W) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "kind",
        "trial",
        "seed",
        "n",
        "p",
        "m",
        "hoffman",
        "gen_hoffman",
        "weaker",
        "conjecture",
        "bollobas_formula",
    ])?;
    for r in &summary.rows {
        w.write_record([
            "trial".to_string(),
            r.trial.to_string(),
            r.seed.to_string(),
            r.n.to_string(),
            summary.p.to_string(),
            r.m.to_string(),
            r.hoffman.to_string(),
            r.gen_hoffman.to_string(),
            r.weaker.to_string(),
            r.conjecture.to_string(),
            String::new(),
        ])?;
    }
    w.write_record([
        "mean".to_string(),
        String::new(),
        summary.seed.to_string(),
        summary.n.to_string(),
        summary.p.to_string(),
        String::new(),
        summary.mean_hoffman.to_string(),
        summary.mean_gen_hoffman.to_string(),
        String::new(),
        summary.mean_conjecture.to_string(),
        summary.bollobas_formula.to_string(),
    ])?;
    w.flush()?;
    Ok(())
}

/// Streaming scan CSV writer: header on construction, then one flat row per
/// scanned graph (witnesses are JSON-lines-only). Use as the scan row hook.
pub struct ScanCsvWriter<W: Write> {
    writer: csv::Writer<W>,
    error: Option<HarnessError>,
}

impl<W: Write> ScanCsvWriter<W> {
    pub fn new(out: W) -> Result<ScanCsvWriter<W>, HarnessError> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record([
            "id",
            "seed",
            "n",
            "m",
            "mu_1",
            "s_plus",
            "s_minus",
            "weaker",
            "conjecture",
            "chi_lower",
            "chi_upper",
            "chi",
            "verdict",
        ])?;
        Ok(ScanCsvWriter {
            writer,
            error: None,
        })
    }

    pub fn write_row(&mut self, f: &SearchFinding) {
        if self.error.is_some() {
            return;
        }
        let result = self.writer.write_record([
            f.id.clone(),
            fmt_opt(f.seed),
            f.n.to_string(),
            f.m.to_string(),
            f.mu_1.to_string(),
            f.s_plus.to_string(),
            f.s_minus.to_string(),
            f.weaker.to_string(),
            f.conjecture.to_string(),
            f.chi_lower.to_string(),
            f.chi_upper.to_string(),
            fmt_opt(f.chi_exact),
            f.verdict.to_string(),
        ]);
        if let Err(e) = result {
            self.error = Some(e.into());
        }
    }

    /// Flushes and surfaces any write error swallowed during streaming.
    pub fn finish(mut self) -> Result<(), HarnessError> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        self.writer.flush()?;
        Ok(())
    }
}

/// One finding as a JSON line (witness included) for the JSON-lines variant.
pub fn finding_to_json_line(f: &SearchFinding) -> String {
    serde_json::to_string(f).expect("findings contain only serializable values")
}
