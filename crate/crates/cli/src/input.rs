//! Graph, coloring, and weight-matrix ingestion for the CLI.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;

use chromabounds::exact::Coloring;
use chromabounds::graphs::{Family, Graph};
use chromabounds::WeightMatrix64;

/// Exactly one graph source per invocation.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Named family spec: petersen | complete:N | multipartite:A,B,… |
    /// cycle:N | path:N | star:N | kneser:P,K | hadamard:N | barbell:K |
    /// gnp:N,P (gnp needs --seed)
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,

    /// DIMACS .col file (p edge / e lines)
    #[arg(long, value_name = "FILE")]
    pub dimacs: Option<PathBuf>,

    /// Plain edge-list file: first line n, then one "u v" pair per line
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
}

impl GraphInput {
    /// Loads the graph; `seed` is consumed only by randomized families.
    /// DIMACS warnings go to stderr.
    pub fn load(&self, seed: Option<u64>) -> Result<Graph> {
        let graph = if let Some(spec) = &self.family {
            let family = Family::parse(spec)?;
            if family.is_randomized() && seed.is_none() {
                bail!("family `{spec}` is randomized: pass --seed");
            }
            family.generate(seed)?
        } else if let Some(path) = &self.dimacs {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let parsed = Graph::parse_dimacs(&text)?;
            for w in &parsed.warnings {
                eprintln!("warning: {w}");
            }
            parsed.graph
        } else if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Graph::parse_edge_list(&text)?
        } else {
            unreachable!("clap group guarantees one source");
        };
        if graph.n() == 0 {
            bail!("graph has no vertices");
        }
        Ok(graph)
    }
}

/// Reads a coloring file — one color (integer ≥ 1) per line, vertex order
/// 1..n; blank lines and # comments skipped — and validates it against `g`,
/// so an improper coloring surfaces its monochromatic edge.
pub fn read_coloring(path: &Path, g: &Graph) -> Result<Coloring> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut colors = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let color: u32 = line
            .parse()
            .with_context(|| format!("line {}: `{line}` is not a color", idx + 1))?;
        colors.push(color);
    }
    Coloring::try_new(g, colors).map_err(|e| anyhow::anyhow!("improper coloring: {e}"))
}

/// Weight-matrix spec: `random:SEED` for a seeded symmetric draw, otherwise
/// a file of "u v w" lines (1-based vertices, symmetric entries implied;
/// unlisted pairs keep weight 1).
pub fn read_weights(spec: &str, g: &Graph) -> Result<WeightMatrix64> {
    if let Some(seed) = spec.strip_prefix("random:") {
        let seed: u64 = seed
            .parse()
            .with_context(|| format!("`{seed}` is not a seed"))?;
        return Ok(WeightMatrix64::random(g.n(), seed));
    }
    let path = Path::new(spec);
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let n = g.n();
    let mut entries = chromabounds::Matrix64::from_fn(n, |_, _| 1.0);
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let ctx = || format!("line {}: expected `u v w`", idx + 1);
        if fields.len() != 3 {
            bail!("{}", ctx());
        }
        let u: usize = fields[0].parse().with_context(ctx)?;
        let v: usize = fields[1].parse().with_context(ctx)?;
        let w: f64 = fields[2].parse().with_context(ctx)?;
        if u < 1 || u > n || v < 1 || v > n {
            bail!("line {}: vertex out of range 1..={n}", idx + 1);
        }
        if !w.is_finite() {
            bail!("line {}: weight must be finite", idx + 1);
        }
        entries[(u - 1, v - 1)] = w;
        entries[(v - 1, u - 1)] = w;
    }
    Ok(WeightMatrix64::from_matrix(entries)?)
}
