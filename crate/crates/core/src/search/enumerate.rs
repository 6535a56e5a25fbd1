//! Isomorph-free graph enumeration and the exact optima built on it.
//!
//! Generation proceeds level by level in the edge count: every graph
//! with k edges arises from a graph with k − 1 edges by inserting one
//! edge, so extending each canonical representative by every non-edge
//! and deduplicating on the canonical code yields exactly one
//! representative per isomorphism class. Levels are processed in
//! parallel and sorted by code, so the output order is deterministic.

use num::Zero;
use rayon::prelude::*;

use super::canon::{canonical_code, canonical_form};
use super::{SearchError, SearchResult};
use crate::count::{count_in_complete, count_subgraphs};
use crate::graph::Graph;
use crate::pattern::PatternSpec;
use crate::BigCount;

/// Largest vertex count accepted for exhaustive enumeration.
pub const ENUMERATION_LIMIT: usize = 9;

/// One canonical representative per isomorphism class of graphs on
/// `n` vertices, optionally restricted to an inclusive edge-count
/// range; ordered by edge count, then canonical code.
pub fn enumerate_nonisomorphic_graphs(
    n: usize,
    edge_bounds: Option<(usize, usize)>,
) -> Result<Vec<Graph>, SearchError> {
    if n > ENUMERATION_LIMIT {
        return Err(SearchError::TooLarge { n, limit: ENUMERATION_LIMIT });
    }
    let max_edges = n * n.saturating_sub(1) / 2;
    let (lo, hi) = match edge_bounds {
        Some((lo, hi)) if lo > hi => {
            return Err(SearchError::BadParameter {
                detail: format!("empty edge range: {lo} > {hi}"),
            })
        }
        Some((lo, hi)) => (lo, hi.min(max_edges)),
        None => (0, max_edges),
    };
    let mut output = Vec::new();
    let mut level: Vec<(Vec<u64>, Graph)> = vec![(canonical_code(&Graph::empty(n)), Graph::empty(n))];
    for edges in 0..=hi {
        if edges > 0 {
            let mut extended: Vec<(Vec<u64>, Graph)> = level
                .par_iter()
                .flat_map_iter(|(_, parent)| {
                    let mut children = Vec::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            if !parent.has_edge(i, j) {
                                let mut child = parent.clone();
                                child.add_edge(i, j);
                                let canonical = canonical_form(&child);
                                children.push((canonical_code(&canonical), canonical));
                            }
                        }
                    }
                    children
                })
                .collect();
            extended.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            extended.dedup_by(|a, b| a.0 == b.0);
            level = extended;
        }
        if edges >= lo {
            output.extend(level.iter().map(|(_, g)| g.clone()));
        }
        if level.is_empty() {
            break;
        }
    }
    Ok(output)
}

/// Minimum number of copies of `target` over all `n`-vertex graphs
/// carrying at least `m` copies of `source`; exhaustive, with ties
/// broken toward the lexicographically least canonical code.
pub fn exact_satex(
    n: usize,
    source: &PatternSpec,
    m: &BigCount,
    target: &PatternSpec,
) -> Result<SearchResult, SearchError> {
    let max_copies = count_in_complete(source, n as u64);
    if *m > max_copies {
        return Err(SearchError::Infeasible { requested: m.clone(), max_copies });
    }
    let graphs = enumerate_nonisomorphic_graphs(n, None)?;
    let explored = graphs.len() as u64;
    let best = graphs
        .into_par_iter()
        .filter(|g| count_subgraphs(source, g) >= *m)
        .map(|g| (count_subgraphs(target, &g), canonical_code(&g), g))
        .min_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)))
        .expect("a feasible graph exists once m ≤ N(source, K_n)");
    let (optimum, _, witness) = best;
    debug_assert!(count_subgraphs(source, &witness) >= *m);
    assert_eq!(count_subgraphs(target, &witness), optimum);
    Ok(SearchResult { optimum, witness, explored, exact: true })
}

/// Maximum number of copies of `pattern` over all `n`-vertex graphs
/// containing no copy of `forbidden`; exhaustive.
pub fn exact_generalized_turan(
    n: usize,
    pattern: &PatternSpec,
    forbidden: &PatternSpec,
) -> Result<SearchResult, SearchError> {
    let graphs = enumerate_nonisomorphic_graphs(n, None)?;
    let explored = graphs.len() as u64;
    let best = graphs
        .into_par_iter()
        .filter(|g| count_subgraphs(forbidden, g).is_zero())
        .map(|g| (count_subgraphs(pattern, &g), canonical_code(&g), g))
        .min_by(|a, b| {
            // Larger count first, then smaller code.
            (&b.0, &a.1).cmp(&(&a.0, &b.1))
        });
    let Some((optimum, _, witness)) = best else {
        return Err(SearchError::Infeasible {
            requested: BigCount::zero(),
            max_copies: BigCount::zero(),
        });
    };
    debug_assert!(count_subgraphs(forbidden, &witness).is_zero());
    assert_eq!(count_subgraphs(pattern, &witness), optimum);
    Ok(SearchResult { optimum, witness, explored, exact: true })
}
