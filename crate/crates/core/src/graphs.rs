//! Simple undirected graphs: construction, parsing, generators for the named
//! families used in the experiments, adjacency/weight matrices, and the
//! Schur (entrywise) product.
//!
//! Vertices are labeled 1..n throughout the public interface. Edges are kept
//! deduplicated, endpoint-sorted (u < v), and lexicographically ordered, so a
//! graph's edge list is a canonical form: two graphs are equal iff their
//! (n, edges) pairs are equal.

use thiserror::Error;

use crate::linalg::{seeded_rng, unit_uniform, Matrix};
use crate::scalar::Scalar;

/// Errors from graph construction, parsing, and generation.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: u32 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("family gnp requires a seed")]
    SeedRequired,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("weight matrix is not symmetric at ({row}, {col})")]
    AsymmetricWeights { row: usize, col: usize },
}

/// Immutable simple undirected graph with 1-based vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Deduplicated, endpoint-sorted (u < v), lexicographically ordered.
    edges: Vec<(u32, u32)>,
    /// `adj[v]` lists the 0-based neighbors of 0-based vertex v, ascending.
    adj: Vec<Vec<usize>>,
    name: String,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating undirected pairs.
    pub fn from_edge_list(
        n: usize,
        pairs: &[(u32, u32)],
        name: impl Into<String>,
    ) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w < 1 || w as usize > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[(u - 1) as usize].push((v - 1) as usize);
            adj[(v - 1) as usize].push((u - 1) as usize);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            name: name.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count m.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: u < v, lexicographic order, 1-based labels.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// 0-based adjacency lists, each sorted ascending.
    pub fn adjacency_lists(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Degree sequence indexed by 0-based vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Adjacency test on 1-based labels; out-of-range vertices are non-adjacent.
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v || u < 1 || v < 1 || u as usize > self.n || v as usize > self.n {
            return false;
        }
        self.adj[(u - 1) as usize]
            .binary_search(&((v - 1) as usize))
            .is_ok()
    }

    /// Complement graph (same vertex set, inverted adjacency).
    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 1..=self.n as u32 {
            for v in (u + 1)..=self.n as u32 {
                if !self.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edge_list(self.n, &pairs, format!("complement({})", self.name))
            .expect("complement edges are in range by construction")
    }

    /// Adjacency matrix: symmetric 0/1, zero diagonal.
    pub fn adjacency_matrix<F: Scalar>(&self) -> Matrix<F> {
        let mut a = Matrix::zeros(self.n);
        for &(u, v) in &self.edges {
            a[((u - 1) as usize, (v - 1) as usize)] = F::one();
            a[((v - 1) as usize, (u - 1) as usize)] = F::one();
        }
        a
    }

    /// Parses DIMACS ".col" text: `c` comments, one `p edge n m` line, then
    /// `e u v` lines. A declared edge count that disagrees with the parsed
    /// count after deduplication is a warning, not an error.
    pub fn parse_dimacs(text: &str) -> Result<ParsedDimacs, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "p" => {
                    if header.is_some() {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: "duplicate `p` line".into(),
                        });
                    }
                    if tokens.len() != 4 || tokens[1] != "edge" {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: "expected `p edge <n> <m>`".into(),
                        });
                    }
                    let n = tokens[2].parse::<usize>().map_err(|_| GraphError::Parse {
                        line: line_no,
                        message: format!("bad vertex count `{}`", tokens[2]),
                    })?;
                    let m = tokens[3].parse::<usize>().map_err(|_| GraphError::Parse {
                        line: line_no,
                        message: format!("bad edge count `{}`", tokens[3]),
                    })?;
                    header = Some((n, m));
                }
                "e" => {
                    let (n, _) = header.ok_or(GraphError::Parse {
                        line: line_no,
                        message: "`e` line before `p` line".into(),
                    })?;
                    if tokens.len() != 3 {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: "expected `e <u> <v>`".into(),
                        });
                    }
                    let mut ends = [0u32; 2];
                    for (slot, tok) in ends.iter_mut().zip(&tokens[1..3]) {
                        *slot = tok.parse::<u32>().map_err(|_| GraphError::Parse {
                            line: line_no,
                            message: format!("bad vertex `{tok}`"),
                        })?;
                    }
                    let [u, v] = ends;
                    if u < 1 || v < 1 || u as usize > n || v as usize > n {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!("vertex out of range 1..={n} in `{line}`"),
                        });
                    }
                    if u == v {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!("self-loop at vertex {u}"),
                        });
                    }
                    pairs.push((u, v));
                }
                other => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: format!("unknown line type `{other}`"),
                    });
                }
            }
        }
        let (n, declared_m) = header.ok_or(GraphError::Parse {
            line: text.lines().count().max(1),
            message: "missing `p edge <n> <m>` line".into(),
        })?;
        let graph = Graph::from_edge_list(n, &pairs, "dimacs")?;
        let mut warnings = Vec::new();
        if graph.m() != declared_m {
            warnings.push(format!(
                "declared {declared_m} edges but parsed {} after deduplication",
                graph.m()
            ));
        }
        Ok(ParsedDimacs { graph, warnings })
    }

    /// Parses plain edge-list text: first significant line is the vertex
    /// count, each following line one `u v` pair. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut n: Option<usize> = None;
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if tokens.len() != 1 {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: "expected a single vertex count on the first line".into(),
                        });
                    }
                    n = Some(tokens[0].parse::<usize>().map_err(|_| GraphError::Parse {
                        line: line_no,
                        message: format!("bad vertex count `{}`", tokens[0]),
                    })?);
                }
                Some(limit) => {
                    if tokens.len() != 2 {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: "expected `u v`".into(),
                        });
                    }
                    let mut ends = [0u32; 2];
                    for (slot, tok) in ends.iter_mut().zip(&tokens[..2]) {
                        *slot = tok.parse::<u32>().map_err(|_| GraphError::Parse {
                            line: line_no,
                            message: format!("bad vertex `{tok}`"),
                        })?;
                    }
                    let [u, v] = ends;
                    if u < 1 || v < 1 || u as usize > limit || v as usize > limit {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!("vertex out of range 1..={limit} in `{line}`"),
                        });
                    }
                    if u == v {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!("self-loop at vertex {u}"),
                        });
                    }
                    pairs.push((u, v));
                }
            }
        }
        let n = n.ok_or(GraphError::Parse {
            line: text.lines().count().max(1),
            message: "missing vertex count line".into(),
        })?;
        Graph::from_edge_list(n, &pairs, "edge-list")
    }
}

/// Result of DIMACS parsing: the graph plus non-fatal warnings.
#[derive(Debug)]
pub struct ParsedDimacs {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// Named graph families. Parse from `name` / `name:arg,arg` specs.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Cycle(usize),
    Path(usize),
    Star(usize),
    Kneser(usize, usize),
    Petersen,
    Hadamard(usize),
    Barbell(usize),
    Gnp { n: usize, p: f64 },
}

impl Family {
    /// Parses a family spec such as `petersen`, `complete:4`, `kneser:5,2`,
    /// `multipartite:3,3,3`, or `gnp:20,0.9` (gnp takes its seed separately).
    pub fn parse(spec: &str) -> Result<Family, GraphError> {
        let bad = |msg: &str| GraphError::InvalidFamily(format!("`{spec}`: {msg}"));
        let (name, args) = match spec.split_once(':') {
            Some((name, args)) => (name.trim(), Some(args.trim())),
            None => (spec.trim(), None),
        };
        let ints = |args: Option<&str>| -> Result<Vec<usize>, GraphError> {
            args.unwrap_or("")
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| bad(&format!("`{t}` is not a non-negative integer")))
                })
                .collect()
        };
        let one_int = |args: Option<&str>| -> Result<usize, GraphError> {
            let v = ints(args)?;
            if v.len() == 1 {
                Ok(v[0])
            } else {
                Err(bad("expected exactly one integer argument"))
            }
        };
        let family = match name {
            "complete" => Family::Complete(one_int(args)?),
            "complete_multipartite" | "multipartite" => {
                let parts = ints(args)?;
                if parts.is_empty() {
                    return Err(bad("expected at least one part size"));
                }
                Family::CompleteMultipartite(parts)
            }
            "cycle" => Family::Cycle(one_int(args)?),
            "path" => Family::Path(one_int(args)?),
            "star" => Family::Star(one_int(args)?),
            "kneser" => {
                let v = ints(args)?;
                if v.len() != 2 {
                    return Err(bad("expected kneser:p,k"));
                }
                Family::Kneser(v[0], v[1])
            }
            "petersen" => {
                if args.is_some() {
                    return Err(bad("petersen takes no arguments"));
                }
                Family::Petersen
            }
            "hadamard" => Family::Hadamard(one_int(args)?),
            "barbell" => Family::Barbell(one_int(args)?),
            "gnp" => {
                let parts: Vec<&str> = args
                    .unwrap_or("")
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .collect();
                if parts.len() != 2 {
                    return Err(bad("expected gnp:n,p"));
                }
                let n = parts[0]
                    .parse::<usize>()
                    .map_err(|_| bad("bad vertex count"))?;
                let p = parts[1]
                    .parse::<f64>()
                    .map_err(|_| bad("bad edge probability"))?;
                Family::Gnp { n, p }
            }
            other => return Err(bad(&format!("unknown family `{other}`"))),
        };
        family.validate().map_err(|m| bad(&m))?;
        Ok(family)
    }

    fn validate(&self) -> Result<(), String> {
        match *self {
            Family::Complete(n) | Family::Path(n) | Family::Star(n) => {
                if n < 1 {
                    return Err("needs at least 1 vertex".into());
                }
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.iter().any(|&r| r < 1) {
                    return Err("part sizes must be ≥ 1".into());
                }
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err("cycle needs n ≥ 3".into());
                }
            }
            Family::Kneser(p, k) => {
                if k < 1 || p < 2 * k {
                    return Err("kneser needs k ≥ 1 and p ≥ 2k".into());
                }
            }
            Family::Petersen => {}
            Family::Hadamard(n_bits) => {
                if n_bits < 2 || n_bits % 2 != 0 {
                    return Err("hadamard needs even N ≥ 2".into());
                }
                if n_bits > 20 {
                    return Err("hadamard N > 20 exceeds desk scale".into());
                }
            }
            Family::Barbell(k) => {
                if k < 1 {
                    return Err("barbell needs k ≥ 1".into());
                }
            }
            Family::Gnp { p, .. } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err("gnp probability must lie in [0, 1]".into());
                }
            }
        }
        Ok(())
    }

    /// Whether generation consumes a seed.
    pub fn is_randomized(&self) -> bool {
        matches!(self, Family::Gnp { .. })
    }

    /// Generates the graph. `seed` is required for (and only read by) gnp.
    pub fn generate(&self, seed: Option<u64>) -> Result<Graph, GraphError> {
        match *self {
            Family::Complete(n) => complete(n),
            Family::CompleteMultipartite(ref parts) => complete_multipartite(parts),
            Family::Cycle(n) => cycle(n),
            Family::Path(n) => path(n),
            Family::Star(n) => star(n),
            Family::Kneser(p, k) => kneser(p, k),
            Family::Petersen => {
                let mut g = kneser(5, 2)?;
                g.name = "petersen".into();
                Ok(g)
            }
            Family::Hadamard(n_bits) => hadamard(n_bits),
            Family::Barbell(k) => barbell(k),
            Family::Gnp { n, p } => {
                let seed = seed.ok_or(GraphError::SeedRequired)?;
                Ok(gnp(n, p, seed))
            }
        }
    }
}

fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    for u in 1..=n as u32 {
        for v in (u + 1)..=n as u32 {
            pairs.push((u, v));
        }
    }
    Graph::from_edge_list(n, &pairs, format!("complete({n})"))
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    // part_of[v] = index of the part containing 0-based vertex v; vertices
    // are numbered part by part.
    let mut part_of = Vec::with_capacity(n);
    for (idx, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(idx, size));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                pairs.push((u as u32 + 1, v as u32 + 1));
            }
        }
    }
    let label = parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Graph::from_edge_list(n, &pairs, format!("multipartite({label})"))
}

fn cycle(n: usize) -> Result<Graph, GraphError> {
    let mut pairs: Vec<(u32, u32)> = (1..n as u32).map(|u| (u, u + 1)).collect();
    pairs.push((n as u32, 1));
    Graph::from_edge_list(n, &pairs, format!("cycle({n})"))
}

fn path(n: usize) -> Result<Graph, GraphError> {
    let pairs: Vec<(u32, u32)> = (1..n as u32).map(|u| (u, u + 1)).collect();
    Graph::from_edge_list(n, &pairs, format!("path({n})"))
}

fn star(n: usize) -> Result<Graph, GraphError> {
    let pairs: Vec<(u32, u32)> = (2..=n as u32).map(|v| (1, v)).collect();
    Graph::from_edge_list(n, &pairs, format!("star({n})"))
}

/// All k-subsets of {1..p} in lexicographic order.
fn k_subsets(p: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn recurse(start: usize, p: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for next in start..=(p + 1 - remaining) {
            current.push(next);
            recurse(next + 1, p, k, current, out);
            current.pop();
        }
    }
    recurse(1, p, k, &mut current, &mut out);
    out
}

/// Kneser graph KG_{p,k}: vertices are the k-subsets of {1..p} in
/// lexicographic order; edges join disjoint subsets.
fn kneser(p: usize, k: usize) -> Result<Graph, GraphError> {
    let subsets = k_subsets(p, k);
    let masks: Vec<u64> = subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &e| m | (1 << e)))
        .collect();
    let n = subsets.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if masks[i] & masks[j] == 0 {
                pairs.push((i as u32 + 1, j as u32 + 1));
            }
        }
    }
    Graph::from_edge_list(n, &pairs, format!("kneser({p},{k})"))
}

/// Hadamard graph G_N: vertices {0,1}^N (vertex id = bitmask + 1), edges
/// where the Hamming distance is exactly N/2.
fn hadamard(n_bits: usize) -> Result<Graph, GraphError> {
    let n = 1usize << n_bits;
    let half = (n_bits / 2) as u32;
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            if ((x ^ y) as u64).count_ones() == half {
                pairs.push((x as u32 + 1, y as u32 + 1));
            }
        }
    }
    Graph::from_edge_list(n, &pairs, format!("hadamard({n_bits})"))
}

/// Barbell graph: two disjoint K_k joined by a single bridge edge between
/// vertex k of the first clique and vertex k+1 of the second
/// (n = 2k, m = k(k−1) + 1).
fn barbell(k: usize) -> Result<Graph, GraphError> {
    let n = 2 * k;
    let mut pairs = Vec::new();
    for offset in [0u32, k as u32] {
        for u in 1..=k as u32 {
            for v in (u + 1)..=k as u32 {
                pairs.push((offset + u, offset + v));
            }
        }
    }
    pairs.push((k as u32, k as u32 + 1));
    Graph::from_edge_list(n, &pairs, format!("barbell({k})"))
}

/// Erdős–Rényi G(n, p), bit-reproducible from the seed: one uniform [0,1)
/// draw per unordered pair, pairs visited in lexicographic order
/// (1,2), (1,3), …, (1,n), (2,3), …; the pair is an edge iff draw < p.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = seeded_rng(seed);
    let mut pairs = Vec::new();
    for u in 1..=n as u32 {
        for v in (u + 1)..=n as u32 {
            let draw: f64 = unit_uniform(&mut rng);
            if draw < p {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs, format!("gnp({n},{p},seed={seed})"))
        .expect("generated pairs are in range by construction")
}

/// Real symmetric weight matrix for Schur-weighted bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix<F> {
    entries: Matrix<F>,
}

impl<F: Scalar> WeightMatrix<F> {
    /// The all-ones matrix J; Schur-multiplying by it is the identity.
    pub fn ones(n: usize) -> WeightMatrix<F> {
        WeightMatrix {
            entries: Matrix::from_fn(n, |_, _| F::one()),
        }
    }

    /// Seeded random symmetric weights, entries uniform in [−1, 1).
    pub fn random(n: usize, seed: u64) -> WeightMatrix<F> {
        WeightMatrix {
            entries: crate::linalg::random_symmetric(n, seed),
        }
    }

    /// Wraps an exactly symmetric matrix.
    pub fn from_matrix(entries: Matrix<F>) -> Result<WeightMatrix<F>, GraphError> {
        let n = entries.n();
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[(i, j)] != entries[(j, i)] {
                    return Err(GraphError::AsymmetricWeights { row: i, col: j });
                }
            }
        }
        Ok(WeightMatrix { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.n()
    }

    pub fn entries(&self) -> &Matrix<F> {
        &self.entries
    }
}

/// Schur (entrywise) product W*A. The result is symmetric with support
/// contained in the support of `a`.
pub fn schur_product<F: Scalar>(
    w: &WeightMatrix<F>,
    a: &Matrix<F>,
) -> Result<Matrix<F>, GraphError> {
    if w.n() != a.n() {
        return Err(GraphError::DimensionMismatch {
            left: w.n(),
            right: a.n(),
        });
    }
    Ok(Matrix::from_fn(a.n(), |i, j| w.entries()[(i, j)] * a[(i, j)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn handshake_holds(g: &Graph) {
        let degree_sum: usize = g.degrees().iter().sum();
        assert_eq!(degree_sum, 2 * g.m(), "handshake failed for {}", g.name());
    }

    #[test]
    fn from_edge_list_builds_k3() {
        let g = Graph::from_edge_list(3, &[(1, 2), (2, 3), (1, 3)], "k3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        handshake_holds(&g);
    }

    #[test]
    fn duplicate_undirected_edges_collapse() {
        let g = Graph::from_edge_list(2, &[(1, 2), (2, 1)], "k2").unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.edges(), &[(1, 2)]);
    }

    #[test]
    fn self_loop_and_range_are_rejected() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)], "bad"),
            Err(GraphError::SelfLoop { vertex: 1 })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 4)], "bad"),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 2)], "bad"),
            Err(GraphError::VertexOutOfRange { vertex: 0, n: 3 })
        ));
    }

    #[test]
    fn dimacs_k3_parses() {
        let parsed = Graph::parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
        assert_eq!(parsed.graph.n(), 3);
        assert_eq!(parsed.graph.m(), 3);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn dimacs_comment_and_k2() {
        let parsed = Graph::parse_dimacs("c comment\np edge 2 1\ne 1 2").unwrap();
        assert_eq!(parsed.graph.n(), 2);
        assert_eq!(parsed.graph.m(), 1);
    }

    #[test]
    fn dimacs_without_p_line_is_an_error() {
        match Graph::parse_dimacs("e 1 2") {
            Err(GraphError::Parse { line: 1, message }) => {
                assert!(message.contains("before `p`"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn dimacs_edge_count_mismatch_warns() {
        let parsed = Graph::parse_dimacs("p edge 3 5\ne 1 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(parsed.graph.m(), 2);
        assert_eq!(parsed.warnings.len(), 1);
        assert!(parsed.warnings[0].contains("declared 5"));
    }

    #[test]
    fn dimacs_vertex_out_of_range_reports_line() {
        match Graph::parse_dimacs("p edge 2 1\ne 1 5") {
            Err(GraphError::Parse { line: 2, .. }) => {}
            other => panic!("expected line-2 parse error, got {other:?}"),
        }
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = Graph::parse_edge_list("# triangle\n3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(Graph::parse_edge_list("3\n1 2 3").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn complete_4_has_6_edges() {
        let g = Family::parse("complete:4").unwrap().generate(None).unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        handshake_holds(&g);
    }

    #[test]
    fn kneser_5_2_is_petersen() {
        let g = Family::parse("kneser:5,2").unwrap().generate(None).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.degrees().iter().all(|&d| d == 3));
        let p = Family::parse("petersen").unwrap().generate(None).unwrap();
        assert_eq!(g.edges(), p.edges());
    }

    #[test]
    fn kneser_7_3_counts() {
        let g = Family::parse("kneser:7,3").unwrap().generate(None).unwrap();
        assert_eq!((g.n(), g.m()), (35, 70));
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn hadamard_4_is_6_regular_and_matches_popcount_oracle() {
        let g = Family::parse("hadamard:4").unwrap().generate(None).unwrap();
        assert_eq!(g.n(), 16);
        assert!(g.degrees().iter().all(|&d| d == 6));
        for x in 0..16u32 {
            for y in 0..16u32 {
                if x == y {
                    continue;
                }
                let expected = (x ^ y).count_ones() == 2;
                assert_eq!(g.has_edge(x + 1, y + 1), expected, "pair {x},{y}");
            }
        }
    }

    #[test]
    fn hadamard_2_is_a_4_cycle() {
        let g = Family::parse("hadamard:2").unwrap().generate(None).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn barbell_8_counts() {
        let g = Family::parse("barbell:8").unwrap().generate(None).unwrap();
        assert_eq!((g.n(), g.m()), (16, 57));
        assert!(g.has_edge(8, 9));
        handshake_holds(&g);
    }

    #[test]
    fn multipartite_3_3_3_counts() {
        let g = Family::parse("multipartite:3,3,3")
            .unwrap()
            .generate(None)
            .unwrap();
        assert_eq!((g.n(), g.m()), (9, 27));
        assert!(!g.has_edge(1, 2));
        assert!(g.has_edge(1, 4));
    }

    #[test]
    fn small_families_line_up() {
        let c5 = Family::parse("cycle:5").unwrap().generate(None).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        let p4 = Family::parse("path:4").unwrap().generate(None).unwrap();
        assert_eq!((p4.n(), p4.m()), (4, 3));
        let s5 = Family::parse("star:5").unwrap().generate(None).unwrap();
        assert_eq!((s5.n(), s5.m()), (5, 4));
        assert_eq!(s5.degrees()[0], 4);
    }

    #[test]
    fn invalid_family_parameters_are_rejected() {
        assert!(Family::parse("kneser:5,3").is_err());
        assert!(Family::parse("hadamard:3").is_err());
        assert!(Family::parse("cycle:2").is_err());
        assert!(Family::parse("gnp:10,1.5").is_err());
        assert!(Family::parse("nosuch:1").is_err());
        assert!(Family::parse("petersen:1").is_err());
    }

    #[test]
    fn gnp_is_reproducible_and_respects_extremes() {
        let a = gnp(12, 0.35, 99);
        let b = gnp(12, 0.35, 99);
        assert_eq!(a.edges(), b.edges());
        let c = gnp(12, 0.35, 100);
        assert_ne!(a.edges(), c.edges());
        assert_eq!(gnp(8, 0.0, 5).m(), 0);
        assert_eq!(gnp(8, 1.0, 5).m(), 28);
        assert!(matches!(
            Family::parse("gnp:8,0.5").unwrap().generate(None),
            Err(GraphError::SeedRequired)
        ));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Family::parse("complete:5").unwrap().generate(None).unwrap();
        assert_eq!(g.complement().m(), 0);
        let c5 = Family::parse("cycle:5").unwrap().generate(None).unwrap();
        assert_eq!(c5.complement().m(), 5);
    }

    #[test]
    fn adjacency_matrix_matches_edges() {
        let g = Family::parse("cycle:3").unwrap().generate(None).unwrap();
        let a = g.adjacency_matrix::<f64>();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 0.0 } else { 1.0 };
                assert_eq!(a[(i, j)], want);
            }
        }
        let empty = Graph::from_edge_list(3, &[], "empty").unwrap();
        assert_eq!(empty.adjacency_matrix::<f64>().max_abs(), 0.0);
    }

    #[test]
    fn schur_product_with_j_is_identity() {
        let g = Family::parse("petersen").unwrap().generate(None).unwrap();
        let a = g.adjacency_matrix::<f64>();
        let j = WeightMatrix::ones(g.n());
        let wa = schur_product(&j, &a).unwrap();
        for i in 0..g.n() {
            for jj in 0..g.n() {
                assert_eq!(wa[(i, jj)], a[(i, jj)]);
            }
        }
    }

    #[test]
    fn schur_product_scales_single_edge() {
        let g = Graph::from_edge_list(2, &[(1, 2)], "k2").unwrap();
        let mut m = Matrix::<f64>::zeros(2);
        m[(0, 1)] = 2.0;
        m[(1, 0)] = 2.0;
        let w = WeightMatrix::from_matrix(m).unwrap();
        let wa = schur_product(&w, &g.adjacency_matrix()).unwrap();
        assert_eq!(wa[(0, 1)], 2.0);
        assert_eq!(wa[(1, 1)], 0.0);
    }

    #[test]
    fn schur_dimension_mismatch_is_an_error() {
        let g = Graph::from_edge_list(2, &[(1, 2)], "k2").unwrap();
        let w = WeightMatrix::<f64>::ones(3);
        assert!(matches!(
            schur_product(&w, &g.adjacency_matrix()),
            Err(GraphError::DimensionMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn asymmetric_weight_matrix_is_rejected() {
        let mut m = Matrix::<f64>::zeros(2);
        m[(0, 1)] = 1.0;
        assert!(matches!(
            WeightMatrix::from_matrix(m),
            Err(GraphError::AsymmetricWeights { row: 0, col: 1 })
        ));
    }
}
