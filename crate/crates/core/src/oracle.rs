//! Slow reference implementations used as independent test oracles.
//!
//! Everything here recomputes results by exhaustive definition-level
//! enumeration (all subsets, all bijections, all permutations) with no
//! shared code or shortcuts from the fast kernels, so agreement is a
//! meaningful check rather than a tautology. Desk scale only.

use std::collections::HashSet;

use crate::combinatorics::combinations;
use crate::graph::Graph;
use crate::BigCount;

/// Copy count by trying every vertex subset and every bijection onto
/// it, deduplicating by the (vertex set, edge image) pair.
pub fn count_subgraphs_naive(pattern: &Graph, host: &Graph) -> BigCount {
    let pv = pattern.n();
    if pv == 0 {
        return BigCount::from(1u32);
    }
    if pv > host.n() {
        return BigCount::from(0u32);
    }
    let pattern_edges = pattern.edges();
    let mut seen: HashSet<(Vec<usize>, Vec<(usize, usize)>)> = HashSet::new();
    for subset in combinations(host.n(), pv) {
        let mut assignment: Vec<usize> = (0..pv).collect();
        permutations(&mut assignment, 0, &mut |perm| {
            // perm[p] = position within subset hosting pattern vertex p.
            let image: Vec<usize> = perm.iter().map(|&i| subset[i]).collect();
            let ok = pattern_edges.iter().all(|&(p, q)| host.has_edge(image[p], image[q]));
            if ok {
                let mut edge_image: Vec<(usize, usize)> = pattern_edges
                    .iter()
                    .map(|&(p, q)| (image[p].min(image[q]), image[p].max(image[q])))
                    .collect();
                edge_image.sort_unstable();
                seen.insert((subset.clone(), edge_image));
            }
        });
    }
    BigCount::from(seen.len() as u64)
}

fn permutations(items: &mut Vec<usize>, depth: usize, visit: &mut impl FnMut(&[usize])) {
    if depth == items.len() {
        visit(items);
        return;
    }
    for i in depth..items.len() {
        items.swap(depth, i);
        permutations(items, depth + 1, visit);
        items.swap(depth, i);
    }
}

/// Canonical representative by minimising the adjacency code over all
/// n! relabelings. Exponential; intended for n ≤ 6.
pub fn canonical_form_naive(g: &Graph) -> Graph {
    let n = g.n();
    assert!(n <= 8, "naive canonicalization is factorial; {n} vertices is too many");
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        // Upper-triangle code of the relabeled graph, column by column.
        let mut code = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut inverse = vec![0usize; n];
        for (old, &new) in p.iter().enumerate() {
            inverse[new] = old;
        }
        for v in 1..n {
            for u in 0..v {
                code.push(g.has_edge(inverse[u], inverse[v]));
            }
        }
        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            best = Some((code, p.to_vec()));
        }
    });
    match best {
        Some((_, perm)) => g.relabel(&perm),
        None => g.clone(),
    }
}

/// Berge bijection count by brute force: every injective vertex map
/// of the pattern into the shadow graph, crossed with every ordered
/// hyperedge tuple checked for distinctness and containment, then
/// divided by the pattern's automorphism count (each unordered copy
/// is visited once per automorphism with identical extensions).
pub fn berge_n3_naive(h: &crate::berge::Hypergraph, f: &crate::pattern::PatternSpec) -> BigCount {
    let tile = f.to_graph();
    let shadow = crate::berge::shadow_graph(h);
    let tile_edges = tile.edges();
    let k = tile_edges.len();
    let mut total = BigCount::from(0u32);
    if tile.n() > shadow.n() {
        return total;
    }
    for subset in combinations(shadow.n(), tile.n()) {
        let mut assignment: Vec<usize> = (0..tile.n()).collect();
        permutations(&mut assignment, 0, &mut |perm| {
            let image: Vec<usize> = perm.iter().map(|&i| subset[i]).collect();
            if !tile_edges.iter().all(|&(p, q)| shadow.has_edge(image[p], image[q])) {
                return;
            }
            // Odometer over all hyperedge index tuples of length k.
            let m = h.edge_count();
            if k > 0 && m == 0 {
                return;
            }
            let mut tuple = vec![0usize; k];
            loop {
                let distinct = (0..k).all(|i| (0..i).all(|j| tuple[i] != tuple[j]));
                let contained = distinct
                    && (0..k).all(|i| {
                        let (p, q) = tile_edges[i];
                        let edge = &h.edges()[tuple[i]];
                        edge.contains(&image[p]) && edge.contains(&image[q])
                    });
                if contained {
                    total += 1u32;
                }
                let mut pos = k;
                while pos > 0 {
                    tuple[pos - 1] += 1;
                    if tuple[pos - 1] < m {
                        break;
                    }
                    tuple[pos - 1] = 0;
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
            }
        });
    }
    total / crate::pattern::brute_force_automorphisms(&tile)
}

/// Disjoint-pair count of a set family by direct elementwise scans.
pub fn disjoint_pairs_naive(family: &[Vec<usize>]) -> BigCount {
    let mut pairs = 0u64;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let disjoint = family[i].iter().all(|x| !family[j].contains(x));
            if disjoint {
                pairs += 1;
            }
        }
    }
    BigCount::from(pairs)
}
