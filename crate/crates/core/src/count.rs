//! Exact subgraph counting.
//!
//! A copy of a pattern F in a host G is an injective map V(F) → V(G)
//! carrying every pattern edge to a host edge (host non-edges under
//! pattern non-edges are allowed), taken up to the automorphisms of F.
//! Conventions: the 0-vertex pattern has exactly one copy everywhere,
//! and a pattern with more vertices than the host has none.
//!
//! Closed-form variants use degree/co-degree formulas; paths, cycles
//! and explicit patterns run a bitset backtracking kernel.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigUint, ToPrimitive, Zero};

use crate::combinatorics::{binomial, falling_factorial};
use crate::graph::Graph;
use crate::pattern::PatternSpec;
use crate::BigCount;

/// Number of copies of `pattern` in `host`.
pub fn count_subgraphs(pattern: &PatternSpec, host: &Graph) -> BigCount {
    debug_assert!(pattern.validate().is_ok());
    let v = pattern.vertex_count();
    if v == 0 {
        return BigCount::from(1u32);
    }
    if v > host.n() {
        return BigCount::zero();
    }
    if v == 1 {
        return BigCount::from(host.n() as u64);
    }
    match *pattern {
        PatternSpec::Clique(k) => BigCount::from(count_cliques(host, k)),
        PatternSpec::Star(s) => count_stars(host, s),
        PatternSpec::CompleteBipartite(a, b) => count_bicliques(host, a, b),
        PatternSpec::Path(k) => BigCount::from(count_paths(host, k)),
        PatternSpec::Cycle(k) => BigCount::from(count_cycles(host, k)),
        PatternSpec::Explicit(ref g) => count_explicit(g, host),
    }
}

/// Number of copies of `pattern` in the complete graph K_n.
///
/// Every injection is an embedding, so this is n·(n-1)···(n-v+1)
/// divided by the automorphism count; exact for any n.
pub fn count_in_complete(pattern: &PatternSpec, n: u64) -> BigCount {
    let v = pattern.vertex_count() as u64;
    let homs = falling_factorial(n, v);
    let aut = pattern.automorphism_count();
    debug_assert!((homs.clone() % aut.clone()).is_zero());
    homs / aut
}

// ============================================================
// Kernels
// ============================================================

struct Mask {
    words: Vec<u64>,
}

impl Mask {
    fn full(n: usize, words: usize) -> Mask {
        let mut m = vec![!0u64; words];
        let spare = words * 64 - n;
        if spare > 0 {
            m[words - 1] >>= spare;
        }
        Mask { words: m }
    }

    fn popcount(words: &[u64]) -> usize {
        words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn count_cliques(host: &Graph, k: usize) -> u128 {
    debug_assert!(k >= 2);
    fn rec(host: &Graph, cand: &[u64], remaining: usize) -> u128 {
        if remaining == 0 {
            return 1;
        }
        if remaining == 1 {
            return Mask::popcount(cand) as u128;
        }
        let mut total = 0u128;
        for v in crate::graph::BitIter::new(cand) {
            // Keep common neighbors above v so each clique is built in
            // ascending vertex order.
            let row = host.row(v);
            let mut next: Vec<u64> = cand.iter().zip(row).map(|(c, r)| c & r).collect();
            clear_up_to(&mut next, v);
            total += rec(host, &next, remaining - 1);
        }
        total
    }
    let full = Mask::full(host.n(), host.row_words());
    rec(host, &full.words, k)
}

/// Clears bits 0..=v in the mask.
fn clear_up_to(mask: &mut [u64], v: usize) {
    let word = v / 64;
    for w in mask.iter_mut().take(word) {
        *w = 0;
    }
    if word < mask.len() {
        let bit = v % 64;
        if bit == 63 {
            mask[word] = 0;
        } else {
            mask[word] &= !0u64 << (bit + 1);
        }
    }
}

fn count_stars(host: &Graph, s: usize) -> BigCount {
    debug_assert!(s >= 1);
    if s == 1 {
        return BigCount::from(host.edge_count() as u64);
    }
    let mut total = BigUint::zero();
    for v in 0..host.n() {
        total += binomial(host.degree(v) as u64, s as u64);
    }
    total
}

fn count_bicliques(host: &Graph, a: usize, b: usize) -> BigCount {
    let (a, b) = (a.min(b), a.max(b));
    debug_assert!(a >= 1);
    if a == 1 && b == 1 {
        return BigCount::from(host.edge_count() as u64);
    }
    let words = host.row_words();
    let full = Mask::full(host.n(), words);
    let mut total = BigUint::zero();
    let mut stack = vec![full.words];
    biclique_rec(host, 0, a, b, &mut stack, &mut total);
    if a == b {
        debug_assert!((total.clone() % 2u32).is_zero());
        total /= 2u32;
    }
    total
}

fn biclique_rec(host: &Graph, start: usize, remaining: usize, b: usize, stack: &mut Vec<Vec<u64>>, total: &mut BigUint) {
    if remaining == 0 {
        let common = Mask::popcount(stack.last().expect("nonempty stack"));
        *total += binomial(common as u64, b as u64);
        return;
    }
    for v in start..host.n() {
        let top = stack.last().expect("nonempty stack");
        let row = host.row(v);
        let next: Vec<u64> = top.iter().zip(row).map(|(m, r)| m & r).collect();
        if Mask::popcount(&next) < b && remaining == 1 {
            continue;
        }
        stack.push(next);
        biclique_rec(host, v + 1, remaining - 1, b, stack, total);
        stack.pop();
    }
}

fn count_paths(host: &Graph, k: usize) -> u128 {
    debug_assert!(k >= 2);
    let words = host.row_words();
    let mut visited = vec![0u64; words];
    let mut directed = 0u128;
    for start in 0..host.n() {
        visited[start / 64] |= 1 << (start % 64);
        directed += path_rec(host, start, k - 1, &mut visited);
        visited[start / 64] &= !(1 << (start % 64));
    }
    debug_assert!(directed % 2 == 0);
    directed / 2
}

fn path_rec(host: &Graph, last: usize, remaining: usize, visited: &mut Vec<u64>) -> u128 {
    if remaining == 0 {
        return 1;
    }
    let mut total = 0u128;
    let free: Vec<u64> = host.row(last).iter().zip(visited.iter()).map(|(r, v)| r & !v).collect();
    for w in crate::graph::BitIter::new(&free) {
        visited[w / 64] |= 1 << (w % 64);
        total += path_rec(host, w, remaining - 1, visited);
        visited[w / 64] &= !(1 << (w % 64));
    }
    total
}

fn count_cycles(host: &Graph, k: usize) -> u128 {
    debug_assert!(k >= 3);
    let words = host.row_words();
    let mut doubled = 0u128;
    let mut visited = vec![0u64; words];
    for root in 0..host.n() {
        // Build paths root, v_2, …, v_k with every v_i > root, closing
        // back to the root; the minimum-vertex root kills rotations and
        // the final halving kills reflections.
        visited[root / 64] |= 1 << (root % 64);
        doubled += cycle_rec(host, root, root, k - 1, &mut visited);
        visited[root / 64] &= !(1 << (root % 64));
    }
    debug_assert!(doubled % 2 == 0);
    doubled / 2
}

fn cycle_rec(host: &Graph, root: usize, last: usize, remaining: usize, visited: &mut Vec<u64>) -> u128 {
    if remaining == 0 {
        return u128::from(host.has_edge(last, root));
    }
    let mut total = 0u128;
    let mut free: Vec<u64> = host.row(last).iter().zip(visited.iter()).map(|(r, v)| r & !v).collect();
    clear_up_to(&mut free, root);
    for w in crate::graph::BitIter::new(&free) {
        visited[w / 64] |= 1 << (w % 64);
        total += cycle_rec(host, root, w, remaining - 1, visited);
        visited[w / 64] &= !(1 << (w % 64));
    }
    total
}

// ============================================================
// Explicit patterns: backtracking over injective embeddings
// ============================================================

/// Embedding order for a pattern: each vertex is preceded by as many of
/// its neighbors as possible, components are started at a vertex of
/// maximum degree; `anchor` forces a specific adjacent pair up front.
fn embedding_order(pattern: &Graph, anchor: Option<(usize, usize)>) -> Vec<(usize, Vec<usize>)> {
    let n = pattern.n();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    if let Some((p, q)) = anchor {
        order.push(p);
        order.push(q);
        placed[p] = true;
        placed[q] = true;
    }
    while order.len() < n {
        // Prefer many already-placed neighbors, then high degree.
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let back = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
            match best {
                Some((b, d, _)) if (back, pattern.degree(v)) <= (b, d) => {}
                _ => best = Some((back, pattern.degree(v), v)),
            }
        }
        let (_, _, v) = best.expect("unplaced vertex exists");
        placed[v] = true;
        order.push(v);
    }
    order
        .iter()
        .map(|&v| {
            let back: Vec<usize> = order
                .iter()
                .take_while(|&&u| u != v)
                .filter(|&&u| pattern.has_edge(u, v))
                .copied()
                .collect();
            (v, back)
        })
        .collect()
}

/// Counts injective adjacency-preserving maps of `pattern` into `host`
/// along `order`; `fixed` pre-pins images for a prefix of the order.
fn count_embeddings(pattern: &Graph, host: &Graph, order: &[(usize, Vec<usize>)], fixed: &[(usize, usize)]) -> u128 {
    debug_assert!(fixed.iter().zip(order).all(|(&(p, _), &(q, _))| p == q));
    let words = host.row_words();
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = vec![0u64; words];
    for &(p, h) in fixed {
        image[p] = h;
        used[h / 64] |= 1 << (h % 64);
    }
    fn rec(
        pattern: &Graph,
        host: &Graph,
        order: &[(usize, Vec<usize>)],
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<u64>,
    ) -> u128 {
        if depth == order.len() {
            return 1;
        }
        let (p, ref back) = order[depth];
        let mut cand: Vec<u64> = used.iter().map(|w| !w).collect();
        let spare = used.len() * 64 - host.n();
        if spare > 0 {
            let last = cand.len() - 1;
            cand[last] &= !0u64 >> spare;
        }
        for &u in back {
            let row = host.row(image[u]);
            for w in 0..cand.len() {
                cand[w] &= row[w];
            }
        }
        let mut total = 0u128;
        for h in crate::graph::BitIter::new(&cand) {
            image[p] = h;
            used[h / 64] |= 1 << (h % 64);
            total += rec(pattern, host, order, depth + 1, image, used);
            used[h / 64] &= !(1 << (h % 64));
            image[p] = usize::MAX;
        }
        total
    }
    rec(pattern, host, order, fixed.len(), &mut image, &mut used)
}

fn count_explicit(pattern: &Graph, host: &Graph) -> BigCount {
    let order = embedding_order(pattern, None);
    let homs = count_embeddings(pattern, host, &order, &[]);
    let aut = crate::pattern::brute_force_automorphisms(pattern)
        .to_u128()
        .expect("automorphism count fits in u128");
    debug_assert_eq!(homs % aut, 0);
    BigCount::from(homs / aut)
}

/// Number of copies of `pattern` in `host` whose image contains the
/// host edge `(u, v)`; the edge must be present in `host`.
///
/// An injective embedding maps at most one pattern edge onto `(u, v)`,
/// so summing anchored embeddings over all oriented pattern edges and
/// dividing by the automorphism count is exact.
pub fn count_subgraphs_through_edge(pattern: &PatternSpec, host: &Graph, u: usize, v: usize) -> BigCount {
    debug_assert!(host.has_edge(u, v));
    let g = pattern.to_graph();
    if g.n() > host.n() || g.edge_count() == 0 {
        return BigCount::zero();
    }
    let mut homs = 0u128;
    for (p, q) in g.edges() {
        for (x, y) in [(p, q), (q, p)] {
            let order = embedding_order(&g, Some((x, y)));
            homs += count_embeddings(&g, host, &order, &[(x, u), (y, v)]);
        }
    }
    let aut = pattern.automorphism_count().to_u128().expect("automorphism count fits in u128");
    debug_assert_eq!(homs % aut, 0);
    BigCount::from(homs / aut)
}

// ============================================================
// Weighted counting
// ============================================================

/// Nonnegative edge weights on a host graph.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EdgeWeighting {
    weights: BTreeMap<(usize, usize), f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum WeightError {
    /// A host edge has no weight assigned.
    MissingEdge { u: usize, v: usize },
    /// Negative weights are rejected.
    NegativeWeight { u: usize, v: usize, weight: f64 },
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WeightError::MissingEdge { u, v } => write!(f, "no weight for host edge ({u}, {v})"),
            WeightError::NegativeWeight { u, v, weight } => {
                write!(f, "negative weight {weight} on edge ({u}, {v})")
            }
        }
    }
}

impl std::error::Error for WeightError {}

impl EdgeWeighting {
    pub fn new() -> EdgeWeighting {
        EdgeWeighting::default()
    }

    /// Same weight on every edge of `host`.
    pub fn uniform(host: &Graph, weight: f64) -> EdgeWeighting {
        let mut w = EdgeWeighting::new();
        for (u, v) in host.edges() {
            w.set(u, v, weight);
        }
        w
    }

    pub fn set(&mut self, u: usize, v: usize, weight: f64) {
        self.weights.insert((u.min(v), u.max(v)), weight);
    }

    pub fn get(&self, u: usize, v: usize) -> Option<f64> {
        self.weights.get(&(u.min(v), u.max(v))).copied()
    }

    fn validate_for(&self, host: &Graph) -> Result<(), WeightError> {
        for (u, v) in host.edges() {
            match self.get(u, v) {
                None => return Err(WeightError::MissingEdge { u, v }),
                Some(w) if w < 0.0 => return Err(WeightError::NegativeWeight { u, v, weight: w }),
                Some(_) => {}
            }
        }
        Ok(())
    }
}

/// Sum over copies of `pattern` of the product of host-edge weights on
/// the image of the pattern's edges.
///
/// With all weights 1 this equals [`count_subgraphs`]. The weighting
/// must cover every host edge and be nonnegative.
pub fn count_weighted_subgraphs(pattern: &PatternSpec, host: &Graph, w: &EdgeWeighting) -> Result<f64, WeightError> {
    debug_assert!(pattern.validate().is_ok());
    w.validate_for(host)?;
    let v = pattern.vertex_count();
    if v == 0 {
        return Ok(1.0);
    }
    if v > host.n() {
        return Ok(0.0);
    }
    let g = pattern.to_graph();
    let order = embedding_order(&g, None);
    let mut image = vec![usize::MAX; g.n()];
    let mut used = vec![false; host.n()];
    let mut total = 0.0;
    weighted_rec(&g, host, w, &order, 0, &mut image, &mut used, 1.0, &mut total);
    let aut = pattern.automorphism_count().to_f64().expect("automorphism count fits in f64");
    Ok(total / aut)
}

#[allow(clippy::too_many_arguments)]
fn weighted_rec(
    pattern: &Graph,
    host: &Graph,
    w: &EdgeWeighting,
    order: &[(usize, Vec<usize>)],
    depth: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    product: f64,
    total: &mut f64,
) {
    if depth == order.len() {
        *total += product;
        return;
    }
    let (p, ref back) = order[depth];
    'candidates: for h in 0..host.n() {
        if used[h] {
            continue;
        }
        let mut next_product = product;
        for &u in back {
            if !host.has_edge(image[u], h) {
                continue 'candidates;
            }
            next_product *= w.get(image[u], h).expect("validated weighting");
        }
        image[p] = h;
        used[h] = true;
        weighted_rec(pattern, host, w, order, depth + 1, image, used, next_product, total);
        used[h] = false;
        image[p] = usize::MAX;
    }
}

// ============================================================
// Co-degree vectors
// ============================================================

/// All a-subsets A of the host's vertices with their co-degree
/// d(A) = |∩_{v∈A} N(v)|, in lexicographic subset order.
pub fn codegree_vector(host: &Graph, a: usize) -> Vec<(Vec<usize>, BigCount)> {
    assert!(a >= 1 && a <= host.n(), "subset size {a} out of range 1..={}", host.n());
    let words = host.row_words();
    let full = Mask::full(host.n(), words);
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(a);
    let mut stack = vec![full.words];
    codegree_rec(host, 0, a, &mut subset, &mut stack, &mut out);
    out
}

fn codegree_rec(
    host: &Graph,
    start: usize,
    remaining: usize,
    subset: &mut Vec<usize>,
    stack: &mut Vec<Vec<u64>>,
    out: &mut Vec<(Vec<usize>, BigCount)>,
) {
    if remaining == 0 {
        let common = Mask::popcount(stack.last().expect("nonempty stack"));
        out.push((subset.clone(), BigCount::from(common as u64)));
        return;
    }
    for v in start..=host.n() - remaining {
        let top = stack.last().expect("nonempty stack");
        let next: Vec<u64> = top.iter().zip(host.row(v)).map(|(m, r)| m & r).collect();
        subset.push(v);
        stack.push(next);
        codegree_rec(host, v + 1, remaining - 1, subset, stack, out);
        stack.pop();
        subset.pop();
    }
}
