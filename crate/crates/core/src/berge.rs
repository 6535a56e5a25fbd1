//! Uniform hypergraphs and the three Berge-copy counting semantics.
//!
//! A Berge copy of a graph F in a hypergraph is a bijection from the
//! edges of a shadow-graph copy of F to distinct hyperedges, each
//! hyperedge containing its edge. The three counts differ in what they
//! enumerate: n1 counts distinct hyperedge-set images, n2 counts
//! shadow copies admitting at least one bijection, and n3 counts the
//! bijections themselves.

use std::collections::BTreeSet;
use std::fmt;

use num::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::combinatorics::{binomial, combinations};
use crate::graph::Graph;
use crate::pattern::PatternSpec;
use crate::search::{exact_satex, SearchError};
use crate::BigCount;

// ============================================================
// Hypergraph
// ============================================================

/// An r-uniform hypergraph on vertices 0..n with a sorted,
/// duplicate-free hyperedge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = BergeError;

    fn try_from(raw: RawHypergraph) -> Result<Hypergraph, BergeError> {
        Hypergraph::new(raw.n, raw.r, raw.edges)
    }
}

impl Hypergraph {
    /// Validates and normalizes: vertices inside each hyperedge are
    /// sorted, the hyperedge list is sorted, duplicates are rejected.
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph, BergeError> {
        if r < 1 {
            return Err(BergeError::BadHypergraph { detail: "uniformity must be at least 1".to_owned() });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut edge = edge;
            edge.sort_unstable();
            if edge.len() != r || edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(BergeError::BadHypergraph {
                    detail: format!("hyperedge {edge:?} is not a set of {r} distinct vertices"),
                });
            }
            if let Some(&v) = edge.last() {
                if v >= n {
                    return Err(BergeError::BadHypergraph {
                        detail: format!("vertex {v} out of range for {n} vertices"),
                    });
                }
            }
            normalized.push(edge);
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            return Err(BergeError::BadHypergraph { detail: "duplicate hyperedge".to_owned() });
        }
        Ok(Hypergraph { n, r, edges: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// All r-subsets of {0..n-1} as hyperedges.
pub fn complete_uniform(n: usize, r: usize) -> Result<Hypergraph, BergeError> {
    if r < 1 || r > n {
        return Err(BergeError::BadHypergraph {
            detail: format!("complete {r}-uniform hypergraph needs 1 <= r <= n, got n={n}"),
        });
    }
    let edges: Vec<Vec<usize>> = combinations(n, r).collect();
    Hypergraph::new(n, r, edges)
}

/// The triangle-separating family: vertices a, b, c plus leaves
/// x_1..x_size, y_1..y_size, z_1..z_size, and the 3·size hyperedges
/// {a,b,x_i}, {a,c,y_i}, {b,c,z_i}. Its shadow graph has 3·size + 1
/// triangles, but only abc admits distinct representing hyperedges,
/// so n2 = 1 while n1 = n3 = size^3 for the triangle pattern.
pub fn triangle_gadget(size: usize) -> Hypergraph {
    let mut edges = Vec::with_capacity(3 * size);
    for i in 0..size {
        edges.push(vec![0, 1, 3 + i]);
        edges.push(vec![0, 2, 3 + size + i]);
        edges.push(vec![1, 2, 3 + 2 * size + i]);
    }
    Hypergraph::new(3 + 3 * size, 3, edges).expect("gadget edges are valid by construction")
}

/// The graph on the same vertices whose edges are the 2-subsets of
/// hyperedges.
pub fn shadow_graph(h: &Hypergraph) -> Graph {
    let mut g = Graph::empty(h.n);
    for edge in &h.edges {
        for i in 0..edge.len() {
            for j in i + 1..edge.len() {
                g.add_edge(edge[i], edge[j]);
            }
        }
    }
    g
}

// ============================================================
// Errors
// ============================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BergeError {
    BadHypergraph { detail: String },
    /// The pattern has too many edges for matching enumeration.
    BudgetExceeded { detail: String },
    /// The instance exceeds the exhaustive-search envelope.
    TooLarge { detail: String },
    /// No hypergraph with the requested hyperedge budget exists.
    Infeasible { detail: String },
}

impl fmt::Display for BergeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BergeError::BadHypergraph { detail }
            | BergeError::BudgetExceeded { detail }
            | BergeError::TooLarge { detail }
            | BergeError::Infeasible { detail } => write!(f, "{detail}"),
        }
    }
}

impl std::error::Error for BergeError {}

impl From<SearchError> for BergeError {
    fn from(err: SearchError) -> BergeError {
        match err {
            SearchError::TooLarge { .. } | SearchError::BadParameter { .. } => {
                BergeError::TooLarge { detail: err.to_string() }
            }
            SearchError::Infeasible { .. } | SearchError::InfeasibleSoFar { .. } => {
                BergeError::Infeasible { detail: err.to_string() }
            }
        }
    }
}

// ============================================================
// Counting
// ============================================================

/// The three Berge-copy counts; always n1 <= n3, n2 <= n3 and
/// n3 <= C(r,2)^{|E(F)|} * n1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergeCounts {
    pub n1: BigCount,
    pub n2: BigCount,
    pub n3: BigCount,
}

impl Serialize for BergeCounts {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("BergeCounts", 3)?;
        state.serialize_field("n1", &self.n1.to_string())?;
        state.serialize_field("n2", &self.n2.to_string())?;
        state.serialize_field("n3", &self.n3.to_string())?;
        state.end()
    }
}

const MATCHING_EDGE_BUDGET: usize = 12;

/// Counts Berge copies of `f` in `h` under all three semantics.
///
/// For every copy of `f` in the shadow graph the bijections onto
/// distinct hyperedges are counted by a subset dynamic program over
/// the copy's edges (n3), copies with at least one bijection are
/// tallied (n2), and the bijection images are deduplicated globally
/// as hyperedge-index sets (n1). Time and memory for n1 scale with
/// the number of bijections, so n3 itself bounds the work.
pub fn berge_counts(h: &Hypergraph, f: &PatternSpec) -> Result<BergeCounts, BergeError> {
    let tile = f.to_graph();
    let tile_edges = tile.edges();
    if tile_edges.len() > MATCHING_EDGE_BUDGET {
        return Err(BergeError::BudgetExceeded {
            detail: format!(
                "pattern has {} edges; matching enumeration is budgeted for {MATCHING_EDGE_BUDGET}",
                tile_edges.len()
            ),
        });
    }
    if h.n > 64 || h.edge_count() > 64 {
        return Err(BergeError::TooLarge {
            detail: format!(
                "hypergraph with {} vertices and {} hyperedges exceeds the 64-bit mask budget",
                h.n,
                h.edge_count()
            ),
        });
    }
    let shadow = shadow_graph(h);
    let copies = enumerate_copies(&tile, &shadow);
    let per_copy: Vec<(u128, bool, BTreeSet<u64>)> = copies
        .par_iter()
        .map(|copy_edges| {
            let candidates: Vec<Vec<usize>> = copy_edges
                .iter()
                .map(|&(u, v)| {
                    (0..h.edges.len())
                        .filter(|&e| h.edges[e].contains(&u) && h.edges[e].contains(&v))
                        .collect()
                })
                .collect();
            let bijections = count_matchings(&candidates, h.edge_count());
            let mut images = BTreeSet::new();
            let enumerated = collect_images(&candidates, &mut images);
            debug_assert_eq!(bijections, enumerated, "matching count routes disagree");
            (bijections, bijections > 0, images)
        })
        .collect();
    let mut counts = BergeCounts {
        n1: BigCount::zero(),
        n2: BigCount::zero(),
        n3: BigCount::zero(),
    };
    let mut all_images: BTreeSet<u64> = BTreeSet::new();
    for (bijections, extendable, images) in per_copy {
        counts.n3 += BigCount::from(bijections);
        if extendable {
            counts.n2 += 1u32;
        }
        all_images.extend(images);
    }
    counts.n1 = BigCount::from(all_images.len());
    debug_assert!(counts.n1 <= counts.n3 && counts.n2 <= counts.n3);
    debug_assert!(
        counts.n3
            <= num::pow::pow(binomial(h.r as u64, 2), tile_edges.len()) * counts.n1.clone()
    );
    Ok(counts)
}

/// Distinct copies of `tile` in `host`, each as its sorted edge-image
/// list. Copies are deduplicated over (vertex set, edge set), which
/// collapses exactly the automorphic re-embeddings.
fn enumerate_copies(tile: &Graph, host: &Graph) -> Vec<Vec<(usize, usize)>> {
    let tile_edges = tile.edges();
    let mut found: BTreeSet<(u64, Vec<(usize, usize)>)> = BTreeSet::new();
    let mut image = vec![usize::MAX; tile.n()];
    let mut used = vec![false; host.n()];
    embed_copies(tile, host, 0, &tile_edges, &mut image, &mut used, &mut found);
    found.into_iter().map(|(_, edges)| edges).collect()
}

#[allow(clippy::too_many_arguments)]
fn embed_copies(
    tile: &Graph,
    host: &Graph,
    depth: usize,
    tile_edges: &[(usize, usize)],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut BTreeSet<(u64, Vec<(usize, usize)>)>,
) {
    if depth == tile.n() {
        let mask = image.iter().fold(0u64, |acc, &v| acc | 1 << v);
        let mut edges: Vec<(usize, usize)> = tile_edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (image[a], image[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        found.insert((mask, edges));
        return;
    }
    'candidates: for v in 0..host.n() {
        if used[v] {
            continue;
        }
        for earlier in 0..depth {
            if tile.has_edge(depth, earlier) && !host.has_edge(v, image[earlier]) {
                continue 'candidates;
            }
        }
        image[depth] = v;
        used[v] = true;
        embed_copies(tile, host, depth + 1, tile_edges, image, used, found);
        used[v] = false;
    }
}

/// Number of ways to assign each candidate list a distinct hyperedge:
/// a subset dynamic program over the pattern edges, scanning the
/// hyperedges once so each is used at most once.
fn count_matchings(candidates: &[Vec<usize>], hyperedges: usize) -> u128 {
    let k = candidates.len();
    if k == 0 {
        return 1;
    }
    let full = (1usize << k) - 1;
    let mut dp = vec![0u128; full + 1];
    dp[0] = 1;
    for column in 0..hyperedges {
        let rows: Vec<usize> = (0..k).filter(|&row| candidates[row].contains(&column)).collect();
        if rows.is_empty() {
            continue;
        }
        for mask in (0..=full).rev() {
            if dp[mask] == 0 {
                continue;
            }
            for &row in &rows {
                if mask & (1 << row) == 0 {
                    dp[mask | (1 << row)] += dp[mask];
                }
            }
        }
    }
    dp[full]
}

/// Enumerates every bijection explicitly, inserting each image
/// hyperedge-set into `images`; returns the number of leaves visited.
fn collect_images(candidates: &[Vec<usize>], images: &mut BTreeSet<u64>) -> u128 {
    fn descend(
        order: &[usize],
        candidates: &[Vec<usize>],
        depth: usize,
        used: u64,
        images: &mut BTreeSet<u64>,
    ) -> u128 {
        if depth == order.len() {
            images.insert(used);
            return 1;
        }
        let mut leaves = 0;
        for &e in &candidates[order[depth]] {
            if used & (1 << e) == 0 {
                leaves += descend(order, candidates, depth + 1, used | (1 << e), images);
            }
        }
        leaves
    }
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_unstable_by_key(|&row| candidates[row].len());
    descend(&order, candidates, 0, 0, images)
}

// ============================================================
// Exhaustive minimisation
// ============================================================

/// Outcome of a brute-force hypergraph minimisation, with the
/// achieving hypergraph as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergeSearchResult {
    pub optimum: BigCount,
    pub witness: Hypergraph,
    pub explored: u64,
    pub exact: bool,
}

impl Serialize for BergeSearchResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("BergeSearchResult", 4)?;
        state.serialize_field("optimum", &self.optimum.to_string())?;
        state.serialize_field("witness", &self.witness)?;
        state.serialize_field("explored", &self.explored)?;
        state.serialize_field("exact", &self.exact)?;
        state.end()
    }
}

const CANDIDATE_BUDGET: u64 = 2_000_000;

/// Minimum of the chosen Berge count (semantics 1, 2 or 3) over all
/// r-uniform hypergraphs with exactly m hyperedges on n vertices, by
/// exhaustive enumeration of hyperedge subsets.
pub fn brute_satex_berge(
    n: usize,
    r: usize,
    m: usize,
    f: &PatternSpec,
    semantics: u8,
) -> Result<BergeSearchResult, BergeError> {
    if !(1..=3).contains(&semantics) {
        return Err(BergeError::BadHypergraph {
            detail: format!("counting semantics must be 1, 2 or 3, got {semantics}"),
        });
    }
    if f.to_graph().edge_count() > MATCHING_EDGE_BUDGET {
        return Err(BergeError::BudgetExceeded {
            detail: format!("pattern has more than {MATCHING_EDGE_BUDGET} edges"),
        });
    }
    let total = binomial(n as u64, r as u64)
        .to_u64()
        .filter(|&t| t <= 64)
        .ok_or_else(|| BergeError::TooLarge {
            detail: format!("C({n},{r}) hyperedge slots exceed the 64-slot enumeration budget"),
        })? as usize;
    if m > total {
        return Err(BergeError::Infeasible {
            detail: format!("no {r}-uniform hypergraph on {n} vertices has {m} hyperedges (max {total})"),
        });
    }
    let candidates = binomial(total as u64, m as u64);
    if candidates > BigCount::from(CANDIDATE_BUDGET) {
        return Err(BergeError::TooLarge {
            detail: format!(
                "C({total},{m}) = {candidates} candidate hypergraphs exceed the budget {CANDIDATE_BUDGET}"
            ),
        });
    }
    let slots: Vec<Vec<usize>> = combinations(n, r).collect();
    let subsets: Vec<Vec<usize>> = combinations(total, m).collect();
    let explored = subsets.len() as u64;
    let best = subsets
        .into_par_iter()
        .map(|chosen| {
            let edges: Vec<Vec<usize>> = chosen.iter().map(|&i| slots[i].clone()).collect();
            let h = Hypergraph::new(n, r, edges).expect("slots are valid hyperedges");
            let counts = berge_counts(&h, f).expect("budgets validated upfront");
            let value = match semantics {
                1 => counts.n1,
                2 => counts.n2,
                _ => counts.n3,
            };
            (value, chosen)
        })
        .min_by(|a, b| a.cmp(b))
        .expect("at least the lexicographically first subset exists");
    let (optimum, chosen) = best;
    let edges: Vec<Vec<usize>> = chosen.iter().map(|&i| slots[i].clone()).collect();
    let witness = Hypergraph::new(n, r, edges).expect("slots are valid hyperedges");
    Ok(BergeSearchResult { optimum, witness, explored, exact: true })
}

// ============================================================
// Sandwich comparisons
// ============================================================

/// One evaluated comparison between two exactly computed quantities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichInequality {
    pub label: String,
    pub lhs: BigCount,
    pub rhs: BigCount,
    pub margin: BigCount,
}

/// Exact values relating graph supersaturation to the three Berge
/// minima at the same budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub n: usize,
    pub r: usize,
    pub m: usize,
    pub satex_graph: BigCount,
    pub satex_berge_1: BigCount,
    pub satex_berge_2: BigCount,
    pub clamped_budget: BigCount,
    pub satex_clamped: BigCount,
    pub inequalities: Vec<SandwichInequality>,
}

impl Serialize for SandwichReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            label: &'a str,
            lhs: String,
            rhs: String,
            margin: String,
        }
        let rows: Vec<Row<'_>> = self
            .inequalities
            .iter()
            .map(|i| Row {
                label: &i.label,
                lhs: i.lhs.to_string(),
                rhs: i.rhs.to_string(),
                margin: i.margin.to_string(),
            })
            .collect();
        let mut state = serializer.serialize_struct("SandwichReport", 9)?;
        state.serialize_field("n", &self.n)?;
        state.serialize_field("r", &self.r)?;
        state.serialize_field("m", &self.m)?;
        state.serialize_field("satex_graph", &self.satex_graph.to_string())?;
        state.serialize_field("satex_berge_1", &self.satex_berge_1.to_string())?;
        state.serialize_field("satex_berge_2", &self.satex_berge_2.to_string())?;
        state.serialize_field("clamped_budget", &self.clamped_budget.to_string())?;
        state.serialize_field("satex_clamped", &self.satex_clamped.to_string())?;
        state.serialize_field("inequalities", &rows)?;
        state.end()
    }
}

/// Verifies, with both sides computed exhaustively, that the graph
/// supersaturation value at budget m dominates the Berge-2 minimum,
/// and that the Berge-1 and Berge-2 minima dominate the graph value
/// at the budget reduced by C(n,2). A violated comparison panics:
/// these are theorems, so failure means an implementation bug.
pub fn berge_sandwich_check(
    n: usize,
    r: usize,
    m: usize,
    f: &PatternSpec,
) -> Result<SandwichReport, BergeError> {
    let clique = PatternSpec::Clique(r);
    let budget = BigCount::from(m);
    let satex_graph = exact_satex(n, &clique, &budget, f)?.optimum;
    let satex_berge_1 = brute_satex_berge(n, r, m, f, 1)?.optimum;
    let satex_berge_2 = brute_satex_berge(n, r, m, f, 2)?.optimum;
    let pairs = binomial(n as u64, 2);
    let clamped_budget = if budget > pairs { budget.clone() - pairs } else { BigCount::zero() };
    let satex_clamped = exact_satex(n, &clique, &clamped_budget, f)?.optimum;
    let comparisons = [
        ("graph satex >= berge-2 satex", &satex_graph, &satex_berge_2),
        ("berge-2 satex >= clamped graph satex", &satex_berge_2, &satex_clamped),
        ("berge-1 satex >= clamped graph satex", &satex_berge_1, &satex_clamped),
    ];
    let mut inequalities = Vec::with_capacity(comparisons.len());
    for (label, lhs, rhs) in comparisons {
        assert!(
            lhs >= rhs,
            "sandwich violation at n={n}, r={r}, m={m}, f={f}: {label} fails with {lhs} < {rhs}"
        );
        inequalities.push(SandwichInequality {
            label: label.to_owned(),
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            margin: lhs.clone() - rhs.clone(),
        });
    }
    Ok(SandwichReport {
        n,
        r,
        m,
        satex_graph,
        satex_berge_1,
        satex_berge_2,
        clamped_budget,
        satex_clamped,
        inequalities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count_subgraphs;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn counts(h: &Hypergraph, f: &PatternSpec) -> (u64, u64, u64) {
        let c = berge_counts(h, f).unwrap();
        (
            c.n1.to_u64().unwrap(),
            c.n2.to_u64().unwrap(),
            c.n3.to_u64().unwrap(),
        )
    }

    #[test]
    fn hypergraph_validation_and_normalization() {
        let h = Hypergraph::new(4, 3, vec![vec![2, 0, 1], vec![3, 1, 0]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![0, 1, 3]]);
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1]]).is_err());
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1, 1]]).is_err());
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1, 4]]).is_err());
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![2, 1, 0]]).is_err());
        assert!(Hypergraph::new(4, 0, vec![]).is_err());
    }

    #[test]
    fn hypergraph_json_round_trip() {
        let h = complete_uniform(4, 3).unwrap();
        let text = serde_json::to_string(&h).unwrap();
        assert_eq!(
            text,
            r#"{"n":4,"r":3,"edges":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}"#
        );
        let parsed: Hypergraph = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, h);
        let bad = r#"{"n":4,"r":3,"edges":[[0,1,2],[0,1,2]]}"#;
        assert!(serde_json::from_str::<Hypergraph>(bad).is_err());
    }

    #[test]
    fn shadow_graph_shapes() {
        let complete = complete_uniform(4, 3).unwrap();
        let shadow = shadow_graph(&complete);
        assert_eq!(shadow.edge_count(), 6);

        let single = Hypergraph::new(4, 3, vec![vec![0, 1, 2]]).unwrap();
        let triangle = shadow_graph(&single);
        assert_eq!(triangle.edge_count(), 3);
        assert_eq!(
            count_subgraphs(&PatternSpec::Clique(3), &triangle),
            BigCount::from(1u32)
        );

        // The separating family's shadow has 3·size + 1 triangles,
        // one per hyperedge plus the central one.
        for size in 1..=3usize {
            let gadget = triangle_gadget(size);
            let shadow = shadow_graph(&gadget);
            assert_eq!(
                count_subgraphs(&PatternSpec::Clique(3), &shadow),
                BigCount::from(3 * size + 1)
            );
        }
    }

    #[test]
    fn cherry_counts_in_the_complete_three_uniform_example() {
        let h = complete_uniform(4, 3).unwrap();
        assert_eq!(counts(&h, &PatternSpec::Path(3)), (6, 12, 36));
    }

    #[test]
    fn gadget_separates_the_preimage_count() {
        assert_eq!(counts(&triangle_gadget(2), &PatternSpec::Clique(3)), (8, 1, 8));
        assert_eq!(counts(&triangle_gadget(3), &PatternSpec::Clique(3)), (27, 1, 27));
    }

    #[test]
    fn single_hyperedge_edge_pattern() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(counts(&h, &PatternSpec::Clique(2)), (1, 3, 3));
    }

    #[test]
    fn two_uniform_hypergraphs_degenerate_to_subgraph_counting() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBE_6E);
        let patterns = [
            PatternSpec::Path(3),
            PatternSpec::Clique(3),
            PatternSpec::Path(4),
            PatternSpec::Cycle(4),
        ];
        for _ in 0..20 {
            let n = rng.gen_range(3..=6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push(vec![u, v]);
                    }
                }
            }
            let h = Hypergraph::new(n, 2, edges.clone()).unwrap();
            let g = Graph::from_edges(n, &edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>())
                .unwrap();
            for pattern in &patterns {
                let c = berge_counts(&h, pattern).unwrap();
                let direct = count_subgraphs(pattern, &g);
                assert_eq!(c.n1, direct, "n1 for {pattern} on {n} vertices");
                assert_eq!(c.n2, direct, "n2 for {pattern} on {n} vertices");
                assert_eq!(c.n3, direct, "n3 for {pattern} on {n} vertices");
            }
        }
    }

    #[test]
    fn bijection_count_matches_the_naive_oracle_with_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBE_63);
        let slots: Vec<Vec<usize>> = combinations(5, 3).collect();
        let patterns = [PatternSpec::Path(3), PatternSpec::Clique(3)];
        for _ in 0..30 {
            let m = rng.gen_range(2..=5);
            let mut chosen: Vec<usize> = (0..slots.len()).collect();
            chosen.shuffle(&mut rng);
            chosen.truncate(m);
            let edges: Vec<Vec<usize>> = chosen.iter().map(|&i| slots[i].clone()).collect();
            let h = Hypergraph::new(5, 3, edges).unwrap();
            for pattern in &patterns {
                let c = berge_counts(&h, pattern).unwrap();
                assert_eq!(c.n3, crate::oracle::berge_n3_naive(&h, pattern), "{pattern}");
                assert!(c.n1 <= c.n3 && c.n2 <= c.n3);
                let factor = num::pow::pow(
                    binomial(3, 2),
                    pattern.edge_count(),
                );
                assert!(c.n3 <= factor * c.n1.clone());
            }
        }
    }

    #[test]
    fn brute_minimisation_anchors() {
        for semantics in 1..=3u8 {
            let zero = brute_satex_berge(4, 3, 0, &PatternSpec::Path(3), semantics).unwrap();
            assert!(zero.optimum.is_zero());
            assert_eq!(zero.explored, 1);
        }
        let full = brute_satex_berge(4, 3, 4, &PatternSpec::Path(3), 2).unwrap();
        assert_eq!(full.optimum, BigCount::from(12u32));
        assert_eq!(full.witness, complete_uniform(4, 3).unwrap());
        assert_eq!(full.explored, 1);

        let sparse = brute_satex_berge(5, 3, 2, &PatternSpec::Clique(3), 1).unwrap();
        assert!(sparse.optimum.is_zero());
        assert_eq!(sparse.explored, 45);
    }

    #[test]
    fn refusals() {
        assert!(matches!(
            brute_satex_berge(4, 3, 5, &PatternSpec::Path(3), 1),
            Err(BergeError::Infeasible { .. })
        ));
        assert!(matches!(
            brute_satex_berge(4, 3, 1, &PatternSpec::Path(3), 4),
            Err(BergeError::BadHypergraph { .. })
        ));
        assert!(matches!(
            brute_satex_berge(12, 3, 1, &PatternSpec::Path(3), 1),
            Err(BergeError::TooLarge { .. })
        ));
        assert!(matches!(
            brute_satex_berge(6, 3, 10, &PatternSpec::Clique(6), 1),
            Err(BergeError::BudgetExceeded { .. })
        ));
        let h = complete_uniform(6, 3).unwrap();
        assert!(matches!(
            berge_counts(&h, &PatternSpec::Clique(6)),
            Err(BergeError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn sandwich_anchor_values() {
        let report = berge_sandwich_check(4, 3, 4, &PatternSpec::Path(3)).unwrap();
        assert_eq!(report.satex_graph, BigCount::from(12u32));
        assert_eq!(report.satex_berge_2, BigCount::from(12u32));
        assert!(report.clamped_budget.is_zero());
        assert!(report.satex_clamped.is_zero());
        assert!(report.inequalities.iter().all(|i| i.lhs >= i.rhs));
        assert!(report.inequalities[0].margin.is_zero());

        let trivial = berge_sandwich_check(5, 3, 3, &PatternSpec::Path(3)).unwrap();
        assert!(trivial.clamped_budget.is_zero());
    }

    #[test]
    fn results_serialize_to_stable_json() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let c = berge_counts(&h, &PatternSpec::Clique(2)).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"n1":"1","n2":"3","n3":"3"}"#
        );
        let result = brute_satex_berge(4, 3, 4, &PatternSpec::Path(3), 2).unwrap();
        let text = serde_json::to_string(&result).unwrap();
        assert!(text.starts_with(r#"{"optimum":"12","witness":{"n":4,"r":3,"edges"#), "{text}");
    }
}
