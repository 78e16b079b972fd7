//! Ground-truth combinatorial oracles at desk scale: proper colorings, the
//! exact chromatic number (DSATUR-ordered branch and bound), a greedy upper
//! bound, and the exact independence number.
//!
//! Every search is deterministic: vertex and color orders are fixed by the
//! documented tie-breaks, so identical inputs yield identical witnesses and
//! node counts. Budget exhaustion is a normal return carrying the best known
//! bracket, never an error.

use thiserror::Error;

use crate::graphs::Graph;

/// Why a vertex-color assignment fails to be a proper coloring.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("assignment has {got} entries for a graph on {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color}; colors must be ≥ 1")]
    ColorOutOfRange { vertex: u32, color: u32 },
    #[error("edge ({u}, {v}) is monochromatic: both endpoints have color {color}")]
    Monochromatic { u: u32, v: u32, color: u32 },
}

/// A proper vertex coloring. Colors are 1-based and need not be contiguous;
/// `colors_used` is the largest color value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<u32>,
    colors_used: u32,
}

impl Coloring {
    /// Validates length, color range, and properness against `g`.
    pub fn try_new(g: &Graph, assignment: Vec<u32>) -> Result<Coloring, ColoringError> {
        if assignment.len() != g.n() {
            return Err(ColoringError::WrongLength {
                expected: g.n(),
                got: assignment.len(),
            });
        }
        for (v0, &color) in assignment.iter().enumerate() {
            if color < 1 {
                return Err(ColoringError::ColorOutOfRange {
                    vertex: v0 as u32 + 1,
                    color,
                });
            }
        }
        for &(u, v) in g.edges() {
            let cu = assignment[(u - 1) as usize];
            let cv = assignment[(v - 1) as usize];
            if cu == cv {
                return Err(ColoringError::Monochromatic { u, v, color: cu });
            }
        }
        let colors_used = assignment.iter().copied().max().unwrap_or(0);
        Ok(Coloring {
            assignment,
            colors_used,
        })
    }

    /// Color of each vertex, indexed by 0-based vertex.
    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// Largest color value in the assignment.
    pub fn colors_used(&self) -> u32 {
        self.colors_used
    }

    /// Color of a 1-based vertex.
    pub fn color_of(&self, vertex: u32) -> u32 {
        self.assignment[(vertex - 1) as usize]
    }
}

/// Greedy proper coloring, largest degree first (ties by lowest index):
/// each vertex takes the smallest color absent from its neighbors.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));

    let mut assignment = vec![0u32; n];
    for &v in &order {
        let mut taken: Vec<u32> = g.adjacency_lists()[v]
            .iter()
            .map(|&u| assignment[u])
            .filter(|&c| c != 0)
            .collect();
        taken.sort_unstable();
        let mut color = 1u32;
        for t in taken {
            if t == color {
                color += 1;
            } else if t > color {
                break;
            }
        }
        assignment[v] = color;
    }
    Coloring::try_new(g, assignment).expect("greedy coloring is proper by construction")
}

/// Outcome of an exact chromatic-number search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChromaticResult {
    Exact {
        chi: u32,
        coloring: Coloring,
        nodes: u64,
    },
    /// The node budget ran out; χ lies in `lower..=upper` and `best` is a
    /// proper coloring with `upper` colors.
    BudgetExceeded {
        lower: u32,
        upper: u32,
        best: Coloring,
        nodes: u64,
    },
}

impl ChromaticResult {
    pub fn exact(&self) -> Option<u32> {
        match self {
            ChromaticResult::Exact { chi, .. } => Some(*chi),
            ChromaticResult::BudgetExceeded { .. } => None,
        }
    }

    /// Sound lower bound on χ in either outcome.
    pub fn lower(&self) -> u32 {
        match self {
            ChromaticResult::Exact { chi, .. } => *chi,
            ChromaticResult::BudgetExceeded { lower, .. } => *lower,
        }
    }

    /// Sound upper bound on χ in either outcome.
    pub fn upper(&self) -> u32 {
        match self {
            ChromaticResult::Exact { chi, .. } => *chi,
            ChromaticResult::BudgetExceeded { upper, .. } => *upper,
        }
    }

    /// The best proper coloring found (optimal in the exact case).
    pub fn coloring(&self) -> &Coloring {
        match self {
            ChromaticResult::Exact { coloring, .. } => coloring,
            ChromaticResult::BudgetExceeded { best, .. } => best,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            ChromaticResult::Exact { nodes, .. } | ChromaticResult::BudgetExceeded { nodes, .. } => {
                *nodes
            }
        }
    }
}

enum SearchOutcome {
    Feasible,
    Infeasible,
    OutOfBudget,
}

/// DSATUR-ordered branch-and-bound state for deciding k-colorability.
struct KColorSearch<'g> {
    g: &'g Graph,
    k: u32,
    assignment: Vec<u32>,
    /// counts[v * stride + c] = colored neighbors of v with color c.
    counts: Vec<u32>,
    stride: usize,
    /// Number of distinct colors on v's neighbors.
    saturation: Vec<u32>,
    degrees: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'g> KColorSearch<'g> {
    fn new(g: &'g Graph, k: u32, budget: u64) -> Self {
        let n = g.n();
        let stride = k as usize + 1;
        KColorSearch {
            g,
            k,
            assignment: vec![0; n],
            counts: vec![0; n * stride],
            stride,
            saturation: vec![0; n],
            degrees: g.degrees(),
            nodes: 0,
            budget,
        }
    }

    fn assign(&mut self, v: usize, color: u32) {
        self.assignment[v] = color;
        for &u in &self.g.adjacency_lists()[v] {
            let slot = u * self.stride + color as usize;
            self.counts[slot] += 1;
            if self.counts[slot] == 1 {
                self.saturation[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, color: u32) {
        self.assignment[v] = 0;
        for &u in &self.g.adjacency_lists()[v] {
            let slot = u * self.stride + color as usize;
            self.counts[slot] -= 1;
            if self.counts[slot] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// DSATUR selection: highest saturation, then highest degree, then
    /// lowest vertex index, over uncolored vertices.
    fn select(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.assignment.len() {
            if self.assignment[v] != 0 {
                continue;
            }
            best = Some(match best {
                None => v,
                Some(b) => {
                    let key_v = (self.saturation[v], self.degrees[v]);
                    let key_b = (self.saturation[b], self.degrees[b]);
                    if key_v > key_b {
                        v
                    } else {
                        b
                    }
                }
            });
        }
        best
    }

    fn dfs(&mut self, uncolored: usize, max_used: u32) -> SearchOutcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return SearchOutcome::OutOfBudget;
        }
        let Some(v) = self.select() else {
            debug_assert_eq!(uncolored, 0);
            return SearchOutcome::Feasible;
        };
        // Symmetry break: a fresh color is interchangeable with any other
        // fresh color, so only the first unused one (max_used + 1) is tried.
        let limit = self.k.min(max_used + 1);
        for color in 1..=limit {
            if self.counts[v * self.stride + color as usize] != 0 {
                continue;
            }
            self.assign(v, color);
            match self.dfs(uncolored - 1, max_used.max(color)) {
                SearchOutcome::Feasible => return SearchOutcome::Feasible,
                SearchOutcome::OutOfBudget => {
                    self.unassign(v, color);
                    return SearchOutcome::OutOfBudget;
                }
                SearchOutcome::Infeasible => self.unassign(v, color),
            }
        }
        SearchOutcome::Infeasible
    }
}

/// Greedy maximal clique, highest degree first — a cheap lower bound on χ.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique
            .iter()
            .all(|&u| g.has_edge(u as u32 + 1, v as u32 + 1))
        {
            clique.push(v);
        }
    }
    clique
}

/// Exact chromatic number by iterating k-colorability from a greedy-clique
/// lower bound up to a greedy-coloring upper bound. The node budget is
/// shared across all k; exhaustion returns the proven bracket.
pub fn chromatic_number(g: &Graph, node_budget: u64) -> ChromaticResult {
    let n = g.n();
    if n == 0 {
        return ChromaticResult::Exact {
            chi: 0,
            coloring: Coloring {
                assignment: Vec::new(),
                colors_used: 0,
            },
            nodes: 0,
        };
    }
    let greedy = greedy_coloring(g);
    let upper = greedy.colors_used();
    let lower = greedy_clique(g).len() as u32;
    debug_assert!(lower >= 1);

    let mut nodes_total: u64 = 0;
    for k in lower..upper {
        let remaining = node_budget.saturating_sub(nodes_total);
        let mut search = KColorSearch::new(g, k, remaining);
        let outcome = search.dfs(n, 0);
        nodes_total += search.nodes;
        match outcome {
            SearchOutcome::Feasible => {
                let coloring = Coloring::try_new(g, search.assignment.clone())
                    .expect("search assignments are proper by construction");
                return ChromaticResult::Exact {
                    chi: k,
                    coloring,
                    nodes: nodes_total,
                };
            }
            SearchOutcome::Infeasible => {}
            SearchOutcome::OutOfBudget => {
                // Colorings with fewer than k colors are ruled out (all
                // smaller k proved infeasible; at k = lower the clique
                // certifies it), so [k, upper] brackets χ.
                return ChromaticResult::BudgetExceeded {
                    lower: k,
                    upper,
                    best: greedy,
                    nodes: nodes_total,
                };
            }
        }
    }
    ChromaticResult::Exact {
        chi: upper,
        coloring: greedy,
        nodes: nodes_total,
    }
}

/// Outcome of an exact independence-number search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaResult {
    Exact {
        alpha: u32,
        /// 1-based vertices of a maximum independent set, ascending.
        witness: Vec<u32>,
        nodes: u64,
    },
    /// Budget ran out; α lies in `lower..=upper` and `witness` attains `lower`.
    BudgetExceeded {
        lower: u32,
        upper: u32,
        witness: Vec<u32>,
        nodes: u64,
    },
}

impl AlphaResult {
    pub fn exact(&self) -> Option<u32> {
        match self {
            AlphaResult::Exact { alpha, .. } => Some(*alpha),
            AlphaResult::BudgetExceeded { .. } => None,
        }
    }

    pub fn lower(&self) -> u32 {
        match self {
            AlphaResult::Exact { alpha, .. } => *alpha,
            AlphaResult::BudgetExceeded { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> u32 {
        match self {
            AlphaResult::Exact { alpha, .. } => *alpha,
            AlphaResult::BudgetExceeded { upper, .. } => *upper,
        }
    }

    pub fn witness(&self) -> &[u32] {
        match self {
            AlphaResult::Exact { witness, .. } | AlphaResult::BudgetExceeded { witness, .. } => {
                witness
            }
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            AlphaResult::Exact { nodes, .. } | AlphaResult::BudgetExceeded { nodes, .. } => *nodes,
        }
    }
}

/// Greedy independent set: repeatedly take the minimum-degree vertex of the
/// remaining graph (ties by lowest index) and delete its closed neighborhood.
fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.degrees();
    let mut picked = Vec::new();
    let mut remaining = n;
    while remaining > 0 {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("remaining > 0");
        picked.push(v);
        let mut to_remove = vec![v];
        to_remove.extend(
            g.adjacency_lists()[v]
                .iter()
                .copied()
                .filter(|&u| alive[u]),
        );
        for u in to_remove {
            alive[u] = false;
            remaining -= 1;
            for &w in &g.adjacency_lists()[u] {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
    }
    picked.sort_unstable();
    picked
}

struct MisSearch<'g> {
    g: &'g Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'g> MisSearch<'g> {
    /// Branch and bound over `cand` (sorted, all pairwise-undecided).
    fn dfs(&mut self, cand: &[usize]) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if self.current.len() + cand.len() <= self.best.len() {
            return;
        }
        // Vertices with no neighbor inside cand belong to every maximum
        // extension; absorb them without branching.
        let mut forced: Vec<usize> = Vec::new();
        let mut undecided: Vec<usize> = Vec::new();
        for &v in cand {
            let deg_in = self.g.adjacency_lists()[v]
                .iter()
                .filter(|&&u| cand.binary_search(&u).is_ok())
                .count();
            if deg_in == 0 {
                forced.push(v);
            } else {
                undecided.push(v);
            }
        }
        let base_len = self.current.len();
        self.current.extend(&forced);
        if undecided.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.current.truncate(base_len);
            return;
        }
        if self.current.len() + undecided.len() <= self.best.len() {
            self.current.truncate(base_len);
            return;
        }
        // Branch on the vertex with the most neighbors inside cand (ties by
        // lowest index): including or excluding it shrinks cand the fastest.
        let &v = undecided
            .iter()
            .max_by_key(|&&v| {
                let deg_in = self.g.adjacency_lists()[v]
                    .iter()
                    .filter(|&&u| undecided.binary_search(&u).is_ok())
                    .count();
                (deg_in, std::cmp::Reverse(v))
            })
            .expect("undecided is non-empty");

        // Include v.
        let without_closed_nbhd: Vec<usize> = undecided
            .iter()
            .copied()
            .filter(|&u| u != v && !self.g.has_edge(v as u32 + 1, u as u32 + 1))
            .collect();
        self.current.push(v);
        self.dfs(&without_closed_nbhd);
        self.current.pop();
        if self.exhausted {
            self.current.truncate(base_len);
            return;
        }

        // Exclude v.
        let without_v: Vec<usize> = undecided.iter().copied().filter(|&u| u != v).collect();
        self.dfs(&without_v);
        self.current.truncate(base_len);
    }
}

/// Exact independence number α by include/exclude branch and bound, seeded
/// with a greedy independent set. On budget exhaustion the bracket's upper
/// end comes from a greedy clique cover (a proper coloring of the
/// complement: α = ω(Ḡ) ≤ χ(Ḡ)).
pub fn independence_number(g: &Graph, node_budget: u64) -> AlphaResult {
    let n = g.n();
    if n == 0 {
        return AlphaResult::Exact {
            alpha: 0,
            witness: Vec::new(),
            nodes: 0,
        };
    }
    let mut search = MisSearch {
        g,
        best: greedy_independent_set(g),
        current: Vec::new(),
        nodes: 0,
        budget: node_budget,
        exhausted: false,
    };
    let all: Vec<usize> = (0..n).collect();
    search.dfs(&all);

    let witness: Vec<u32> = {
        let mut w: Vec<u32> = search.best.iter().map(|&v| v as u32 + 1).collect();
        w.sort_unstable();
        w
    };
    if search.exhausted {
        let clique_cover = greedy_coloring(&g.complement()).colors_used();
        let lower = witness.len() as u32;
        AlphaResult::BudgetExceeded {
            lower,
            upper: clique_cover.max(lower),
            witness,
            nodes: search.nodes,
        }
    } else {
        AlphaResult::Exact {
            alpha: witness.len() as u32,
            witness,
            nodes: search.nodes,
        }
    }
}

/// Reference chromatic number by exhaustive enumeration of all assignments
/// with c = 1..n colors. Exponential; intended as an independent oracle for
/// graphs on at most ~8 vertices.
pub fn brute_force_chromatic(g: &Graph) -> u32 {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let proper = |assignment: &[u32]| {
        g.edges()
            .iter()
            .all(|&(u, v)| assignment[(u - 1) as usize] != assignment[(v - 1) as usize])
    };
    for c in 1..=n as u32 {
        let mut assignment = vec![1u32; n];
        'enumerate: loop {
            if proper(&assignment) {
                return c;
            }
            // Odometer increment over {1..c}^n; wrap-around ends this c.
            let mut pos = 0;
            loop {
                if pos == n {
                    break 'enumerate;
                }
                if assignment[pos] < c {
                    assignment[pos] += 1;
                    break;
                }
                assignment[pos] = 1;
                pos += 1;
            }
        }
    }
    unreachable!("every graph on n vertices is n-colorable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Family;

    fn family(spec: &str) -> Graph {
        Family::parse(spec).unwrap().generate(None).unwrap()
    }

    #[test]
    fn coloring_validation_reports_each_failure() {
        let g = family("complete:3");
        assert_eq!(
            Coloring::try_new(&g, vec![1, 2]),
            Err(ColoringError::WrongLength {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            Coloring::try_new(&g, vec![1, 0, 2]),
            Err(ColoringError::ColorOutOfRange {
                vertex: 2,
                color: 0
            })
        );
        assert_eq!(
            Coloring::try_new(&g, vec![1, 1, 2]),
            Err(ColoringError::Monochromatic {
                u: 1,
                v: 2,
                color: 1
            })
        );
        let ok = Coloring::try_new(&g, vec![1, 2, 3]).unwrap();
        assert_eq!(ok.colors_used(), 3);
    }

    #[test]
    fn non_contiguous_colors_are_accepted() {
        let g = family("path:3");
        let c = Coloring::try_new(&g, vec![1, 5, 1]).unwrap();
        assert_eq!(c.colors_used(), 5);
    }

    #[test]
    fn greedy_on_complete_and_edgeless() {
        assert_eq!(greedy_coloring(&family("complete:6")).colors_used(), 6);
        let edgeless = Graph::from_edge_list(4, &[], "edgeless").unwrap();
        assert_eq!(greedy_coloring(&edgeless).colors_used(), 1);
    }

    #[test]
    fn greedy_on_c5_uses_three_colors() {
        assert_eq!(greedy_coloring(&family("cycle:5")).colors_used(), 3);
    }

    #[test]
    fn chromatic_number_known_values() {
        let budget = 10_000_000;
        assert_eq!(chromatic_number(&family("petersen"), budget).exact(), Some(3));
        assert_eq!(
            chromatic_number(&family("multipartite:3,3"), budget).exact(),
            Some(2)
        );
        assert_eq!(chromatic_number(&family("barbell:8"), budget).exact(), Some(8));
        assert_eq!(chromatic_number(&family("cycle:5"), budget).exact(), Some(3));
        assert_eq!(chromatic_number(&family("complete:6"), budget).exact(), Some(6));
        assert_eq!(chromatic_number(&family("kneser:6,2"), budget).exact(), Some(4));
    }

    #[test]
    fn chromatic_witness_is_proper_and_minimal_width() {
        let g = family("petersen");
        match chromatic_number(&g, 10_000_000) {
            ChromaticResult::Exact { chi, coloring, .. } => {
                assert_eq!(chi, 3);
                assert_eq!(coloring.colors_used(), 3);
                assert!(Coloring::try_new(&g, coloring.assignment().to_vec()).is_ok());
            }
            other => panic!("expected exact result, got {other:?}"),
        }
    }

    #[test]
    fn zero_budget_returns_sound_bracket() {
        let g = family("petersen");
        match chromatic_number(&g, 0) {
            ChromaticResult::BudgetExceeded {
                lower,
                upper,
                best,
                ..
            } => {
                assert!(lower >= 2);
                assert!(lower <= 3, "lower bound must stay sound");
                assert!(upper >= 3);
                assert_eq!(best.colors_used(), upper);
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn independence_number_known_values() {
        let budget = 10_000_000;
        assert_eq!(independence_number(&family("complete:7"), budget).exact(), Some(1));
        assert_eq!(independence_number(&family("cycle:5"), budget).exact(), Some(2));
        assert_eq!(independence_number(&family("petersen"), budget).exact(), Some(4));
        assert_eq!(independence_number(&family("star:9"), budget).exact(), Some(8));
    }

    #[test]
    fn independence_witness_is_independent() {
        let g = family("petersen");
        let result = independence_number(&g, 10_000_000);
        let w = result.witness();
        assert_eq!(w.len(), 4);
        for i in 0..w.len() {
            for j in (i + 1)..w.len() {
                assert!(!g.has_edge(w[i], w[j]));
            }
        }
    }

    #[test]
    fn independence_zero_budget_brackets_alpha() {
        let g = family("petersen");
        match independence_number(&g, 0) {
            AlphaResult::BudgetExceeded { lower, upper, .. } => {
                assert!(lower <= 4, "greedy witness is a real independent set");
                assert!(upper >= 4, "clique-cover bound must stay sound");
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn brute_force_matches_branch_and_bound_on_small_graphs() {
        for spec in ["cycle:5", "cycle:6", "complete:4", "path:5", "star:5"] {
            let g = family(spec);
            assert_eq!(
                brute_force_chromatic(&g),
                chromatic_number(&g, 10_000_000).exact().unwrap(),
                "mismatch on {spec}"
            );
        }
    }
}
