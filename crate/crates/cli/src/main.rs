//! chromabounds — spectral chromatic-number bounds, exact coloring oracles,
//! conversion-identity verification, and conjecture-search harness.
//!
//! Exit codes: 0 success/consistent scan; 1 usage, input, or verification
//! failure; 2 counterexample found (CONJECTURE-VIOLATION or WILF-VIOLATION).

mod input;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use chromabounds::bounds::{bound_report, BoundOptions};
use chromabounds::conversion::{
    coloring_to_representation, hadamard_representation, pinching_check,
    representation_to_unitaries, verify_annihilation, verify_reversal, OrthogonalRepresentation,
};
use chromabounds::exact::{chromatic_number, ChromaticResult};
use chromabounds::graphs::{schur_product, Family, Graph};
use chromabounds::harness::{
    corpus_run, counterexample_scan_with, finding_to_json_line, named_corpus, random_sweep,
    write_corpus_csv, write_sweep_csv, CorpusSummary, ScanCsvWriter, ScanSpec, SearchFinding,
    SweepSummary,
};
use chromabounds::linalg::CMatrix;
use chromabounds::{BoundReport64, Tolerances64, WeightMatrix64};

/// Spectral lower bounds on the chromatic number, exact coloring oracles,
/// and constructive verification of the unitary-conversion identities.
#[derive(Parser, Debug)]
#[command(name = "chromabounds", version, max_term_width = 100)]
struct Cli {
    /// Print the effective tolerance/config table and exit
    #[arg(long, global = true)]
    show_config: bool,

    /// Worker threads for harness trials (sweep/search); other commands are
    /// single-threaded
    #[arg(long, global = true, env = "CHROMABOUNDS_JOBS", value_name = "N")]
    jobs: Option<usize>,

    #[command(flatten)]
    overrides: ToleranceOverrides,

    #[command(subcommand)]
    command: Option<Command>,
}

/// Every tolerance defaults from the central config record; any field can be
/// pinned from the command line.
#[derive(Args, Debug)]
struct ToleranceOverrides {
    /// Jacobi convergence: off-diagonal Frobenius target factor
    #[arg(long, global = true, value_name = "X")]
    jacobi_conv_factor: Option<f64>,
    /// Jacobi sweep cap
    #[arg(long, global = true, value_name = "N")]
    jacobi_max_sweeps: Option<usize>,
    /// Eigenvalue zero-classification factor (× n · max|a|)
    #[arg(long, global = true, value_name = "X")]
    zero_tol_factor: Option<f64>,
    /// Eigenpair residual factor (× n · max|a|)
    #[arg(long, global = true, value_name = "X")]
    eig_residual_factor: Option<f64>,
    /// Eigenvector orthonormality factor (× n)
    #[arg(long, global = true, value_name = "X")]
    orthonormality_factor: Option<f64>,
    /// Relative symmetry slack accepted by the eigensolver
    #[arg(long, global = true, value_name = "X")]
    asymmetry_rel_tol: Option<f64>,
    /// Conversion-identity residual threshold
    #[arg(long, global = true, value_name = "X")]
    residual_tol: Option<f64>,
    /// Modulus slack for normalized representations
    #[arg(long, global = true, value_name = "X")]
    normalization_tol: Option<f64>,
    /// Majorization prefix-sum slack
    #[arg(long, global = true, value_name = "X")]
    majorization_tol: Option<f64>,
    /// Exactness/comparison slack (verdicts, bound-vs-χ checks)
    #[arg(long, global = true, value_name = "X")]
    exactness_tol: Option<f64>,
    /// Strict-inequality margin for bound orderings
    #[arg(long, global = true, value_name = "X")]
    ordering_tol: Option<f64>,
    /// Branch-and-bound node budget for exact χ/α
    #[arg(long, global = true, value_name = "N")]
    node_budget: Option<u64>,
    /// Sweep cap for the diagonal-scaling heuristic
    #[arg(long, global = true, value_name = "N")]
    barnes_sweeps: Option<usize>,
}

impl ToleranceOverrides {
    fn apply(&self) -> Tolerances64 {
        let mut t = Tolerances64::default();
        macro_rules! set {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field { t.$field = v; })*
            };
        }
        set!(
            jacobi_conv_factor,
            jacobi_max_sweeps,
            zero_tol_factor,
            eig_residual_factor,
            orthonormality_factor,
            asymmetry_rel_tol,
            residual_tol,
            normalization_tol,
            majorization_tol,
            exactness_tol,
            ordering_tol,
            node_budget,
            barnes_sweeps
        );
        t
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the full spectral bound table for one graph
    Bounds(BoundsArgs),
    /// Verify the annihilation, sign-reversal, and pinching identities
    Verify(VerifyArgs),
    /// Run seeded G(n,p) trials and report mean bounds
    Sweep(SweepArgs),
    /// Scan for conjecture counterexamples (exit 2 on any violation)
    Search(SearchArgs),
    /// Compute the bound table for the bundled named-graph corpus
    Corpus(CorpusArgs),
    /// Print the effective tolerance/config table
    ShowConfig,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    input: input::GraphInput,
    /// Also compute exact χ and α (branch and bound, node-budget capped)
    #[arg(long)]
    exact: bool,
    /// Run the diagonal-scaling heuristic bound
    #[arg(long)]
    barnes: bool,
    /// Schur weights: a "u v w" file or random:SEED
    #[arg(long, value_name = "FILE|random:SEED")]
    weights: Option<String>,
    /// Seed for randomized families (gnp)
    #[arg(long)]
    seed: Option<u64>,
    /// Emit the report as JSON (full precision) instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: input::GraphInput,
    /// Proper coloring file (one color per line); computed exactly if absent
    #[arg(long, value_name = "FILE")]
    coloring: Option<PathBuf>,
    /// Schur weights: a "u v w" file or random:SEED (default: all-ones)
    #[arg(long, value_name = "FILE|random:SEED")]
    weights: Option<String>,
    /// Also build a normalized orthogonal representation (±1 vectors for
    /// hadamard:N, Fourier columns otherwise) and verify its unitaries
    #[arg(long)]
    representation: bool,
    /// Seed for randomized families (gnp)
    #[arg(long)]
    seed: Option<u64>,
    /// Emit the residual report as JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Vertex count
    #[arg(long)]
    n: usize,
    /// Edge probability (strictly between 0 and 1)
    #[arg(long)]
    p: f64,
    /// Number of independent draws (trial i uses seed + i)
    #[arg(long, default_value_t = 15)]
    trials: usize,
    /// Base seed
    #[arg(long)]
    seed: u64,
    /// Write per-trial rows plus a mean row as CSV
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Emit the summary as JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Scan seeded G(n,p) samples; format n:p (e.g. 10:0.85)
    #[arg(long, value_name = "N:P", conflicts_with = "exhaustive")]
    gnp: Option<String>,
    /// Number of G(n,p) samples (trial i uses seed + i)
    #[arg(long, requires = "gnp", default_value_t = 100)]
    trials: usize,
    /// Scan every graph on 1..=max-n vertices by edge-subset enumeration
    #[arg(long, requires = "max_n")]
    exhaustive: bool,
    /// Largest vertex count for --exhaustive (≤ 7)
    #[arg(long, requires = "exhaustive")]
    max_n: Option<usize>,
    /// Base seed (required; ignored by --exhaustive, which is deterministic)
    #[arg(long)]
    seed: u64,
    /// Stream one flat CSV row per scanned graph
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Stream one JSON line per scanned graph (witnesses included)
    #[arg(long, value_name = "FILE")]
    jsonl: Option<PathBuf>,
    /// Emit findings plus summary as JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Skip exact χ/α (bounds only)
    #[arg(long)]
    skip_exact: bool,
    /// Write the table as CSV
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Emit rows plus summary as JSON instead of a table
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (e.g. `chromabounds corpus | head`)
    // instead of panicking mid-table.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let tol = cli.overrides.apply();
    if cli.show_config {
        print_config(&tol, cli.jobs);
        return Ok(0);
    }
    match cli.command {
        None => bail!("no command given; see --help"),
        Some(Command::ShowConfig) => {
            print_config(&tol, cli.jobs);
            Ok(0)
        }
        Some(Command::Bounds(args)) => cmd_bounds(args, &tol),
        Some(Command::Verify(args)) => cmd_verify(args, &tol),
        Some(Command::Sweep(args)) => in_pool(cli.jobs, || cmd_sweep(args, &tol)),
        Some(Command::Search(args)) => in_pool(cli.jobs, || cmd_search(args, &tol)),
        Some(Command::Corpus(args)) => cmd_corpus(args, &tol),
    }
}

/// Runs harness work inside a bounded rayon pool when --jobs is given.
/// Results are merged in trial order, so the thread count never changes
/// output.
fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("rayon pool")
            .install(f),
    }
}

fn print_config(tol: &Tolerances64, jobs: Option<usize>) {
    println!("{:<24}{:e}", "jacobi_conv_factor", tol.jacobi_conv_factor);
    println!("{:<24}{}", "jacobi_max_sweeps", tol.jacobi_max_sweeps);
    println!("{:<24}{:e}", "zero_tol_factor", tol.zero_tol_factor);
    println!("{:<24}{:e}", "eig_residual_factor", tol.eig_residual_factor);
    println!(
        "{:<24}{:e}",
        "orthonormality_factor", tol.orthonormality_factor
    );
    println!("{:<24}{:e}", "asymmetry_rel_tol", tol.asymmetry_rel_tol);
    println!("{:<24}{:e}", "residual_tol", tol.residual_tol);
    println!("{:<24}{:e}", "normalization_tol", tol.normalization_tol);
    println!("{:<24}{:e}", "majorization_tol", tol.majorization_tol);
    println!("{:<24}{:e}", "exactness_tol", tol.exactness_tol);
    println!("{:<24}{:e}", "ordering_tol", tol.ordering_tol);
    println!("{:<24}{}", "node_budget", tol.node_budget);
    println!("{:<24}{}", "barnes_sweeps", tol.barnes_sweeps);
    match jobs {
        Some(n) => println!("{:<24}{}", "jobs", n),
        None => println!("{:<24}(all cores)", "jobs"),
    }
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

fn cmd_bounds(args: BoundsArgs, tol: &Tolerances64) -> Result<u8> {
    let g = args.input.load(args.seed)?;
    let weights = args
        .weights
        .as_deref()
        .map(|spec| input::read_weights(spec, &g))
        .transpose()?;
    let opts = BoundOptions {
        exact_budget: args.exact.then_some(tol.node_budget),
        barnes: args.barnes,
        weights: weights.as_ref(),
    };
    let report = bound_report(&g, &opts, tol)?;
    if args.json {
        let doc = serde_json::json!({
            "graph": { "name": g.name(), "n": g.n(), "m": g.m() },
            "report": report,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        render_bounds_table(&g, &report, args.weights.as_deref());
    }
    Ok(0)
}

fn fmt_bound(b: &chromabounds::bounds::Bound<f64>) -> String {
    if b.degenerate {
        format!("{:.4}  (degenerate)", b.value)
    } else {
        format!("{:.4}", b.value)
    }
}

fn render_bounds_table(g: &Graph, r: &BoundReport64, weights: Option<&str>) {
    let row = |label: &str, value: String| println!("{label:<22}{value}");
    row("graph", format!("{} (n={}, m={})", g.name(), r.n, r.m));
    row("mu_1", format!("{:.4}", r.mu_1));
    row("mu_n", format!("{:.4}", r.mu_n));
    row("s_plus", format!("{:.4}", r.s_plus));
    row("s_minus", format!("{:.4}", r.s_minus));
    row("hoffman", fmt_bound(&r.hoffman));
    row(
        "gen_hoffman",
        format!(
            "{}  (best m = {})",
            fmt_bound(&r.gen_hoffman),
            r.gen_hoffman_best_m
        ),
    );
    row("weaker", fmt_bound(&r.weaker));
    row("conjecture", fmt_bound(&r.conjecture));
    row("cvetkovic", fmt_bound(&r.cvetkovic));
    row("myers_liu", fmt_bound(&r.myers_liu));
    row("edwards_elphick", fmt_bound(&r.edwards_elphick));
    row("bollobas_nikiforov", fmt_bound(&r.bollobas_nikiforov));
    row("wilf_upper", fmt_bound(&r.wilf_upper));
    if let Some(b) = r.barnes {
        row("barnes", format!("{b:.4}"));
    }
    match (r.chi_exact, r.chi_bracket) {
        (Some(chi), _) => row("chi", format!("{chi}")),
        (None, Some((lo, hi))) => row("chi", format!("[{lo}, {hi}]  (budget exceeded)")),
        (None, None) => {}
    }
    match (r.alpha_exact, r.alpha_bracket) {
        (Some(a), _) => row("alpha", format!("{a}")),
        (None, Some((lo, hi))) => row("alpha", format!("[{lo}, {hi}]  (budget exceeded)")),
        (None, None) => {}
    }
    if let Some(ab) = r.alpha_bound {
        row("alpha_bound", format!("{ab:.4}"));
    }
    if let Some(w) = &r.weighted {
        row(
            "weighted with",
            weights.unwrap_or("(weights)").to_string(),
        );
        row(
            "  gen_hoffman[W]",
            format!(
                "{}  (best m = {})",
                fmt_bound(&w.gen_hoffman),
                w.gen_hoffman_best_m
            ),
        );
        row("  weaker[W]", fmt_bound(&w.weaker));
        row("  conjecture[W]", fmt_bound(&w.conjecture));
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct ResidualLine {
    label: &'static str,
    value: f64,
}

fn cmd_verify(args: VerifyArgs, tol: &Tolerances64) -> Result<u8> {
    let g = args.input.load(args.seed)?;
    let w = match args.weights.as_deref() {
        Some(spec) => input::read_weights(spec, &g)?,
        None => WeightMatrix64::ones(g.n()),
    };
    let weights_label = args.weights.clone().unwrap_or_else(|| "J (all-ones)".into());

    let (phi, coloring_label) = match &args.coloring {
        Some(path) => {
            let phi = input::read_coloring(path, &g)?;
            let label = format!("supplied ({} colors)", phi.colors_used());
            (phi, label)
        }
        None => match chromatic_number(&g, tol.node_budget) {
            ChromaticResult::Exact { chi, coloring, .. } => {
                (coloring, format!("computed exact ({chi} colors)"))
            }
            ChromaticResult::BudgetExceeded { best, .. } => {
                let label = format!(
                    "best found ({} colors, optimality unproven)",
                    best.colors_used()
                );
                (best, label)
            }
        },
    };

    let mut lines = vec![
        ResidualLine {
            label: "annihilation residual",
            value: verify_annihilation(&g, &w, &phi)?,
        },
        ResidualLine {
            label: "reversal residual",
            value: verify_reversal(&g, &w, &phi)?,
        },
        ResidualLine {
            label: "pinching residual",
            value: {
                let wa = schur_product(&w, &g.adjacency_matrix())?;
                pinching_check(&CMatrix::from_real(&wa), &phi)?
            },
        },
    ];

    let mut rep_label = None;
    if args.representation {
        let (rep, label): (OrthogonalRepresentation<f64>, String) = match hadamard_bits(&args, &g)
        {
            Some(bits) => (
                hadamard_representation(bits)?,
                format!("hadamard ±1 vectors (d={bits})"),
            ),
            None => {
                let c = phi.colors_used() as usize;
                (
                    coloring_to_representation(&phi, c)?,
                    format!("Fourier coloring columns (d={c})"),
                )
            }
        };
        lines.push(ResidualLine {
            label: "orthogonality defect",
            value: rep.adjacency_orthogonality_defect(&g)?,
        });
        let converted = representation_to_unitaries(&rep, &g, tol)?;
        lines.push(ResidualLine {
            label: "representation residual",
            value: converted.residual,
        });
        rep_label = Some(label);
    }

    let pass = lines.iter().all(|l| l.value <= tol.residual_tol);
    if args.json {
        let residuals: serde_json::Map<String, serde_json::Value> = lines
            .iter()
            .map(|l| {
                (
                    l.label.replace(' ', "_"),
                    serde_json::Value::from(l.value),
                )
            })
            .collect();
        let doc = serde_json::json!({
            "graph": { "name": g.name(), "n": g.n(), "m": g.m() },
            "weights": weights_label,
            "coloring": { "label": coloring_label, "assignment": phi.assignment() },
            "representation": rep_label,
            "residuals": residuals,
            "residual_tol": tol.residual_tol,
            "pass": pass,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        let row = |label: &str, value: String| println!("{label:<24}{value}");
        row("graph", format!("{} (n={}, m={})", g.name(), g.n(), g.m()));
        row("weights", weights_label);
        row("coloring", coloring_label);
        if let Some(label) = rep_label {
            row("representation", label);
        }
        for l in &lines {
            let status = if l.value <= tol.residual_tol {
                "PASS"
            } else {
                "FAIL"
            };
            row(l.label, format!("{:.4e}  {status}", l.value));
        }
        row(
            "overall",
            format!(
                "{}  (tolerance {:.4e})",
                if pass { "PASS" } else { "FAIL" },
                tol.residual_tol
            ),
        );
    }
    Ok(if pass { 0 } else { 1 })
}

/// N when the graph came from --family hadamard:N, so the ±1 representation
/// applies; any other input gets the Fourier-column representation.
fn hadamard_bits(args: &VerifyArgs, _g: &Graph) -> Option<usize> {
    let spec = args.input.family.as_deref()?;
    match Family::parse(spec).ok()? {
        Family::Hadamard(bits) => Some(bits),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

fn cmd_sweep(args: SweepArgs, tol: &Tolerances64) -> Result<u8> {
    let summary = random_sweep(args.n, args.p, args.trials, args.seed, tol)?;
    if let Some(path) = &args.csv {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_sweep_csv(&summary, BufWriter::new(file))?;
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&summary)?);
    } else {
        render_sweep_table(&args, &summary);
    }
    Ok(0)
}

fn render_sweep_table(args: &SweepArgs, s: &SweepSummary) {
    let row = |label: &str, value: String| println!("{label:<22}{value}");
    row(
        "sweep",
        format!("G({}, {}) x {} (seed {})", s.n, s.p, s.rows.len(), s.seed),
    );
    row("mean hoffman", format!("{:.4}", s.mean_hoffman));
    row("mean gen_hoffman", format!("{:.4}", s.mean_gen_hoffman));
    row("mean conjecture", format!("{:.4}", s.mean_conjecture));
    row("bollobas formula", format!("{:.4}", s.bollobas_formula));
    if let Some(path) = &args.csv {
        row("csv", path.display().to_string());
    }
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

fn parse_gnp_spec(spec: &str) -> Result<(usize, f64)> {
    let (n, p) = spec
        .split_once(':')
        .context("expected --gnp N:P, e.g. 10:0.85")?;
    let n: usize = n.trim().parse().context("bad vertex count in --gnp")?;
    let p: f64 = p.trim().parse().context("bad probability in --gnp")?;
    Ok((n, p))
}

fn cmd_search(args: SearchArgs, tol: &Tolerances64) -> Result<u8> {
    let (spec, label) = if let Some(gnp) = &args.gnp {
        let (n, p) = parse_gnp_spec(gnp)?;
        (
            ScanSpec::Gnp {
                n,
                p,
                trials: args.trials,
            },
            format!("gnp({n}, {p}) x {} (seed {})", args.trials, args.seed),
        )
    } else if args.exhaustive {
        let max_n = args.max_n.expect("clap requires --max-n with --exhaustive");
        (
            ScanSpec::Exhaustive { max_n },
            format!("exhaustive, all graphs on 1..={max_n} vertices"),
        )
    } else {
        bail!("pass either --gnp N:P or --exhaustive --max-n K");
    };

    let mut csv = args
        .csv
        .as_ref()
        .map(|path| -> Result<ScanCsvWriter<BufWriter<File>>> {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            Ok(ScanCsvWriter::new(BufWriter::new(file))?)
        })
        .transpose()?;
    let mut jsonl = args
        .jsonl
        .as_ref()
        .map(|path| -> Result<BufWriter<File>> {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            Ok(BufWriter::new(file))
        })
        .transpose()?;

    let mut jsonl_error: Option<std::io::Error> = None;
    let outcome = counterexample_scan_with(&spec, args.seed, tol.node_budget, tol, |row| {
        if let Some(w) = csv.as_mut() {
            w.write_row(row);
        }
        if let Some(out) = jsonl.as_mut() {
            if jsonl_error.is_none() {
                if let Err(e) = writeln!(out, "{}", finding_to_json_line(row)) {
                    jsonl_error = Some(e);
                }
            }
        }
    })?;
    if let Some(w) = csv {
        w.finish()?;
    }
    if let Some(e) = jsonl_error {
        return Err(e).context("writing JSON lines");
    }
    if let Some(mut out) = jsonl {
        out.flush().context("flushing JSON lines")?;
    }

    if args.json {
        let doc = serde_json::json!({
            "scan": label,
            "seed": args.seed,
            "summary": outcome.summary,
            "findings": outcome.findings,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        render_search_table(&label, &outcome.summary, &outcome.findings);
    }
    Ok(if outcome.summary.has_violation() { 2 } else { 0 })
}

fn render_search_table(
    label: &str,
    s: &chromabounds::harness::ScanSummary,
    findings: &[SearchFinding],
) {
    let row = |label: &str, value: String| println!("{label:<24}{value}");
    row("scan", label.to_string());
    row("scanned", s.scanned.to_string());
    row("consistent", s.consistent.to_string());
    row("conjecture-violations", s.conjecture_violations.to_string());
    row("wilf-violations", s.wilf_violations.to_string());
    row("budget-exceeded", s.budget_exceeded.to_string());
    row(
        "bipartite cross-check",
        format!(
            "{} graphs, max |conjecture - 2| = {:.4e}",
            s.bipartite_checked, s.bipartite_max_deviation
        ),
    );
    for f in findings {
        println!(
            "finding: {} n={} m={} conjecture={:.4} chi=[{}, {}] verdict={}",
            f.id, f.n, f.m, f.conjecture, f.chi_lower, f.chi_upper, f.verdict
        );
    }
    row(
        "verdict",
        if s.has_violation() {
            "VIOLATION FOUND (exit 2)".to_string()
        } else {
            "consistent".to_string()
        },
    );
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

fn cmd_corpus(args: CorpusArgs, tol: &Tolerances64) -> Result<u8> {
    let graphs = named_corpus();
    let budget = (!args.skip_exact).then_some(tol.node_budget);
    let rows = corpus_run(&graphs, budget, tol);
    let summary = CorpusSummary::from_rows(&rows);
    if let Some(path) = &args.csv {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_corpus_csv(&rows, BufWriter::new(file))?;
    }
    if args.json {
        let doc = serde_json::json!({ "rows": rows, "summary": summary });
        println!("{}", serde_json::to_string_pretty(&doc)?);
        return Ok(0);
    }
    println!(
        "{:<20}{:>4}{:>5}  {:>9}{:>13}{:>9}{:>12}{:>6}{:>7}",
        "name", "n", "m", "hoffman", "gen_hoffman", "weaker", "conjecture", "chi", "alpha"
    );
    for r in &rows {
        match &r.report {
            Some(rep) => {
                let chi = rep
                    .chi_exact
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into());
                let alpha = rep
                    .alpha_exact
                    .map(|a| a.to_string())
                    .unwrap_or_else(|| "-".into());
                println!(
                    "{:<20}{:>4}{:>5}  {:>9.4}{:>13.4}{:>9.4}{:>12.4}{:>6}{:>7}",
                    r.name,
                    r.n,
                    r.m,
                    rep.hoffman.value,
                    rep.gen_hoffman.value,
                    rep.weaker.value,
                    rep.conjecture.value,
                    chi,
                    alpha
                );
            }
            None => println!(
                "{:<20}{:>4}{:>5}  error: {}",
                r.name,
                r.n,
                r.m,
                r.error.as_deref().unwrap_or("unknown")
            ),
        }
    }
    println!(
        "summary: {} rows, gen_hoffman > hoffman on {:.1}%, conjecture > hoffman on {:.1}%",
        summary.rows, summary.pct_gen_gt_hoffman, summary.pct_conj_gt_hoffman
    );
    Ok(0)
}
