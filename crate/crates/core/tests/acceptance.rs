//! Acceptance gate: one test per shipping criterion. Each prints a single
//! `acceptance N (...): PASS`/`FAIL` line and enforces its stated tolerances
//! and runtime budget.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use chromabounds::bounds::{bound_report, BoundOptions};
use chromabounds::config::Tolerances;
use chromabounds::conversion::{
    annihilation_residual_raw, hadamard_representation, pinching_check,
    representation_to_unitaries, verify_annihilation, verify_reversal,
};
use chromabounds::exact::chromatic_number;
use chromabounds::graphs::{schur_product, Family, Graph, WeightMatrix};
use chromabounds::harness::{
    counterexample_scan, named_corpus, random_sweep, ScanSpec, Verdict,
};
use chromabounds::linalg::{
    abs_via_spectrum, eig_symmetric, is_majorized, random_symmetric, random_unitary, CMatrix,
};
use chromabounds::{Matrix64, Tolerances64};

fn tol() -> Tolerances64 {
    Tolerances::default()
}

/// Runs one criterion, prints its pass/fail line, and enforces its runtime
/// budget.
fn criterion(number: u32, title: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= budget => {
            println!("acceptance {number} ({title}): PASS [{elapsed:.2?}]");
        }
        Ok(()) => {
            println!(
                "acceptance {number} ({title}): FAIL [runtime {elapsed:.2?} over budget {budget:.2?}]"
            );
            panic!("criterion {number} exceeded its {budget:.2?} runtime budget: {elapsed:.2?}");
        }
        Err(cause) => {
            println!("acceptance {number} ({title}): FAIL [{elapsed:.2?}]");
            resume_unwind(cause);
        }
    }
}

fn exact_report(g: &Graph) -> chromabounds::bounds::BoundReport<f64> {
    let tol = tol();
    let opts = BoundOptions {
        exact_budget: Some(tol.node_budget),
        ..BoundOptions::default()
    };
    bound_report(g, &opts, &tol).unwrap()
}

#[test]
fn acceptance_1_barbell_snapshot() {
    criterion(1, "barbell(8) bound snapshot", Duration::from_secs(1), || {
        let g = Family::Barbell(8).generate(None).unwrap();
        let report = exact_report(&g);
        assert!(
            (report.hoffman.value - 4.8).abs() <= 0.05,
            "hoffman {}",
            report.hoffman.value
        );
        assert!(
            (report.gen_hoffman.value - 5.9).abs() <= 0.05,
            "generalized hoffman {}",
            report.gen_hoffman.value
        );
        assert!(
            (report.conjecture.value - 7.3).abs() <= 0.05,
            "conjecture {}",
            report.conjecture.value
        );
        assert_eq!(report.chi_exact, Some(8), "chromatic number of barbell(8)");
    });
}

#[test]
fn acceptance_2_sweep_windows() {
    criterion(2, "random sweep mean windows", Duration::from_secs(30), || {
        let tol = tol();
        let dense = random_sweep(20, 0.9, 15, 7, &tol).unwrap();
        assert!(
            (5.8..=6.8).contains(&dense.mean_hoffman),
            "G(20,0.9) mean hoffman {}",
            dense.mean_hoffman
        );
        assert!(
            (7.7..=8.7).contains(&dense.mean_conjecture),
            "G(20,0.9) mean conjecture {}",
            dense.mean_conjecture
        );
        let medium = random_sweep(50, 0.5, 15, 7, &tol).unwrap();
        assert!(
            (4.0..=5.0).contains(&medium.mean_hoffman),
            "G(50,0.5) mean hoffman {}",
            medium.mean_hoffman
        );
        assert!(
            (2.7..=3.7).contains(&medium.mean_conjecture),
            "G(50,0.5) mean conjecture {}",
            medium.mean_conjecture
        );
    });
}

#[test]
fn acceptance_3_conjecture_exact_on_complete_multipartite() {
    criterion(
        3,
        "conjecture attains chi on complete multipartite families",
        Duration::from_secs(60),
        || {
            let mut cases: Vec<(Family, u32)> = Vec::new();
            for n in 2..=10 {
                cases.push((Family::Complete(n), n as u32));
            }
            for a in 1..=5usize {
                for b in a..=5 {
                    cases.push((Family::CompleteMultipartite(vec![a, b]), 2));
                }
            }
            for parts in 2..=4usize {
                for size in 1..=5 {
                    cases.push((
                        Family::CompleteMultipartite(vec![size; parts]),
                        parts as u32,
                    ));
                }
            }
            for (family, expected_chi) in cases {
                let g = family.generate(None).unwrap();
                let report = exact_report(&g);
                let chi = report.chi_exact.expect("small graphs finish exactly");
                assert_eq!(chi, expected_chi, "{}", g.name());
                assert!(
                    (report.conjecture.value - chi as f64).abs() <= 1e-6,
                    "{}: conjecture {} vs chi {}",
                    g.name(),
                    report.conjecture.value,
                    chi
                );
            }
        },
    );
}

#[test]
fn acceptance_4_conversion_identities_on_corpus() {
    criterion(
        4,
        "unitary conversion identities across the corpus",
        Duration::from_secs(120),
        || {
            let tol = tol();
            for g in named_corpus() {
                let chi = chromatic_number(&g, tol.node_budget);
                assert!(chi.exact().is_some(), "{}: chi must resolve", g.name());
                let phi = chi.coloring();
                let a = g.adjacency_matrix::<f64>();

                let mut weightings = vec![WeightMatrix::<f64>::ones(g.n())];
                for seed in 0..20 {
                    weightings.push(WeightMatrix::random(g.n(), seed));
                }
                for w in &weightings {
                    let ann = verify_annihilation(&g, w, phi).unwrap();
                    assert!(ann <= 1e-10, "{}: annihilation residual {ann}", g.name());
                    let rev = verify_reversal(&g, w, phi).unwrap();
                    assert!(rev <= 1e-10, "{}: reversal residual {rev}", g.name());
                    let wa = CMatrix::from_real(&schur_product(w, &a).unwrap());
                    let pin = pinching_check(&wa, phi).unwrap();
                    assert!(pin <= 1e-10, "{}: pinching residual {pin}", g.name());
                }
            }

            // Sensitivity: a corrupted (improper) assignment must light up.
            let k3 = Family::Complete(3).generate(None).unwrap();
            let j = WeightMatrix::<f64>::ones(3);
            let corrupted = annihilation_residual_raw(&k3, &j, &[1, 2, 2], 3).unwrap();
            assert!(
                corrupted >= 1.0,
                "corrupted coloring residual {corrupted} should be >= 1"
            );
        },
    );
}

#[test]
fn acceptance_5_majorization_and_rotated_trace() {
    criterion(
        5,
        "majorization and rotated-trace inequalities",
        Duration::from_secs(60),
        || {
            let tol = tol();
            for trial in 0..100u64 {
                let n = 2 + (trial as usize % 11);
                let a = random_symmetric::<f64>(n, 2 * trial);
                let b = random_symmetric::<f64>(n, 2 * trial + 1);
                let mu_a = eig_symmetric(&a, &tol).unwrap();
                let mu_b = eig_symmetric(&b, &tol).unwrap();
                let mu_sum = eig_symmetric(&a.add(&b), &tol).unwrap();
                let combined: Vec<f64> = mu_a
                    .values()
                    .iter()
                    .zip(mu_b.values())
                    .map(|(x, y)| x + y)
                    .collect();
                assert!(
                    is_majorized(mu_sum.values(), &combined, tol.majorization_tol).unwrap(),
                    "majorization failed on pair {trial}"
                );
            }
            for trial in 0..100u64 {
                let n = 2 + (trial as usize % 11);
                let a = random_symmetric::<f64>(n, 9000 + trial);
                let u = random_unitary::<f64>(n, 9500 + trial);
                let s = eig_symmetric(&a, &tol).unwrap();
                let s_minus = s.spectral_sums(&s.inertia()).s_minus;
                let abs_a = CMatrix::from_real(&abs_via_spectrum(&s));
                let neg_a = CMatrix::from_real(&a.scaled(-1.0));
                let fwd = abs_a
                    .multiply(&u)
                    .unwrap()
                    .multiply(&neg_a)
                    .unwrap()
                    .multiply(&u.adjoint())
                    .unwrap()
                    .trace()
                    .re;
                let rev = abs_a
                    .multiply(&u.adjoint())
                    .unwrap()
                    .multiply(&neg_a)
                    .unwrap()
                    .multiply(&u)
                    .unwrap()
                    .trace()
                    .re;
                let lhs = 0.5 * (fwd + rev);
                assert!(
                    lhs <= s_minus + 1e-8,
                    "pair {trial}: rotated trace {lhs} exceeds S- {s_minus}"
                );
            }
        },
    );
}

#[test]
fn acceptance_6_exhaustive_small_graphs() {
    criterion(
        6,
        "exhaustive soundness on all graphs up to 6 vertices",
        Duration::from_secs(300),
        || {
            let tol = tol();
            let outcome =
                counterexample_scan(&ScanSpec::Exhaustive { max_n: 6 }, 0, tol.node_budget, &tol)
                    .unwrap();
            assert_eq!(outcome.summary.scanned, 33_867);
            assert_eq!(outcome.summary.conjecture_violations, 0);
            assert_eq!(outcome.summary.wilf_violations, 0);
            assert_eq!(outcome.summary.budget_exceeded, 0);
            assert!(outcome
                .findings
                .iter()
                .all(|f| f.verdict == Verdict::Consistent));

            // Independent re-derivation: every lower bound must sit at or
            // below chi, the generalized bound dominates Hoffman, n - alpha
            // dominates S+/S-, and Wilf covers chi from above.
            for n in 1usize..=6 {
                let pairs: Vec<(u32, u32)> = (1..=n as u32)
                    .flat_map(|u| ((u + 1)..=n as u32).map(move |v| (u, v)))
                    .collect();
                for mask in 0u64..1 << pairs.len() {
                    let chosen: Vec<(u32, u32)> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    let g = Graph::from_edge_list(n, &chosen, "scan").unwrap();
                    let report = exact_report(&g);
                    let chi = f64::from(report.chi_exact.unwrap());
                    let alpha = f64::from(report.alpha_exact.unwrap());
                    for (label, bound) in [
                        ("hoffman", &report.hoffman),
                        ("gen_hoffman", &report.gen_hoffman),
                        ("weaker", &report.weaker),
                    ] {
                        assert!(
                            bound.value <= chi + 1e-6,
                            "n={n} mask={mask}: {label} {} > chi {chi}",
                            bound.value
                        );
                    }
                    assert!(report.gen_hoffman.value >= report.hoffman.value - 1e-9);
                    if !report.weaker.degenerate {
                        assert!(
                            n as f64 - alpha >= report.weaker.value - 1e-9,
                            "n={n} mask={mask}: n-alpha {} < S+/S- {}",
                            n as f64 - alpha,
                            report.weaker.value
                        );
                    }
                    assert!(
                        report.wilf_upper.value >= chi - 1e-6,
                        "n={n} mask={mask}: wilf {} < chi {chi}",
                        report.wilf_upper.value
                    );
                }
            }
        },
    );
}

#[test]
fn acceptance_7_hadamard_representations() {
    criterion(
        7,
        "hadamard orthogonal representations",
        Duration::from_secs(120),
        || {
            let tol = tol();
            for bits in [2usize, 4, 8, 12] {
                let rep = hadamard_representation::<f64>(bits).unwrap();
                assert!(rep.is_normalized(), "N={bits}: vectors unit length");
                let g = Family::Hadamard(bits).generate(None).unwrap();
                let defect = rep.adjacency_orthogonality_defect(&g).unwrap();
                assert!(
                    defect <= 1e-10,
                    "N={bits}: orthogonality defect {defect}"
                );
            }

            let g4 = Family::Hadamard(4).generate(None).unwrap();
            let chi = chromatic_number(&g4, tol.node_budget);
            assert_eq!(chi.exact(), Some(4), "chi of the 4-bit hadamard graph");

            let rep4 = hadamard_representation::<f64>(4).unwrap();
            let unitaries = representation_to_unitaries(&rep4, &g4, &tol).unwrap();
            assert_eq!(unitaries.unitaries.len(), 4);
            assert!(
                unitaries.residual <= 1e-10,
                "representation unitaries residual {}",
                unitaries.residual
            );
        },
    );
}

#[test]
fn acceptance_8_eigensolver_quality() {
    criterion(
        8,
        "eigensolver quality across the corpus",
        Duration::from_secs(60),
        || {
            let tol = tol();
            for g in named_corpus() {
                let n = g.n();
                let a = g.adjacency_matrix::<f64>();
                let s = eig_symmetric(&a, &tol).unwrap();
                let v = s.vectors();

                let av = a.matmul(v);
                let vl = Matrix64::from_fn(n, |i, j| v[(i, j)] * s.values()[j]);
                let residual = av.sub(&vl).max_abs();
                let residual_budget = tol.eig_residual(n, a.max_abs());
                assert!(
                    residual <= residual_budget,
                    "{}: residual {residual} > {residual_budget}",
                    g.name()
                );

                let gram = v.transpose().matmul(v);
                let ortho = gram.sub(&Matrix64::identity(n)).max_abs();
                let ortho_budget = tol.orthonormality_tol(n);
                assert!(
                    ortho <= ortho_budget,
                    "{}: orthonormality {ortho} > {ortho_budget}",
                    g.name()
                );

                let zero_budget = tol.zero_tol(n, a.max_abs()).max(1e-12);
                let trace: f64 = s.values().iter().sum();
                assert!(trace.abs() <= zero_budget, "{}: trace {trace}", g.name());
                let energy: f64 = s.values().iter().map(|m| m * m).sum();
                assert!(
                    (energy - 2.0 * g.m() as f64).abs() <= zero_budget * n as f64,
                    "{}: energy {energy} vs 2m {}",
                    g.name(),
                    2 * g.m()
                );
            }

            // Petersen has the known integer spectrum (3, 1^5, (-2)^4).
            let petersen = Family::Petersen.generate(None).unwrap();
            let s = eig_symmetric(&petersen.adjacency_matrix::<f64>(), &tol).unwrap();
            let mut expected = vec![3.0];
            expected.extend(std::iter::repeat_n(1.0, 5));
            expected.extend(std::iter::repeat_n(-2.0, 4));
            for (got, want) in s.values().iter().zip(&expected) {
                assert!(
                    (got - want).abs() <= 1e-8,
                    "petersen eigenvalue {got} vs {want}"
                );
            }
        },
    );
}

#[test]
fn acceptance_9_random_search_replication() {
    criterion(
        9,
        "random counterexample searches stay consistent",
        Duration::from_secs(120),
        || {
            let tol = tol();
            for (p, seed) in [(0.85f64, 3u64), (0.9, 5)] {
                let outcome = counterexample_scan(
                    &ScanSpec::Gnp {
                        n: 10,
                        p,
                        trials: 100,
                    },
                    seed,
                    tol.node_budget,
                    &tol,
                )
                .unwrap();
                assert_eq!(outcome.summary.scanned, 100);
                assert_eq!(
                    outcome.summary.consistent, 100,
                    "G(10,{p}) seed {seed}: all verdicts must be consistent"
                );
                assert!(!outcome.summary.has_violation());
            }
        },
    );
}
