//! Canonical forms via colour refinement plus individualization
//! backtracking.
//!
//! The canonical form is the relabelling, among those compatible with
//! iterated degree refinement, whose upper-triangle adjacency bit
//! string is lexicographically least. Refinement and the choice of
//! branching cell depend only on the isomorphism type, so isomorphic
//! graphs map to identical forms; the form is not in general the
//! minimum over all n! relabellings, and equality of forms (not any
//! particular representative) is the module's contract.

use crate::graph::Graph;

/// Canonical relabelling of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let perm = canonical_permutation(g);
    g.relabel(&perm)
}

/// Upper-triangle bit string of the canonical form, packed MSB-first
/// so that lexicographic comparison of the words matches lexicographic
/// comparison of the bit strings.
pub fn canonical_code(g: &Graph) -> Vec<u64> {
    let perm = canonical_permutation(g);
    pack_code(g, &perm)
}

/// Single-word code for hosts small enough that the upper triangle
/// fits in 64 bits (n ≤ 11).
pub fn canonical_code_compact(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "compact codes hold at most C(11,2) = 55 bits, got n = {}", g.n());
    let code = canonical_code(g);
    code.first().copied().unwrap_or(0)
}

fn canonical_permutation(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return vec![0; n];
    }
    let mut colors = vec![0usize; n];
    let classes = refine(g, &mut colors);
    let mut searcher = Searcher { g, best: None, best_perm: vec![0; n] };
    searcher.descend(colors, classes);
    searcher.best_perm
}

struct Searcher<'a> {
    g: &'a Graph,
    best: Option<Vec<u64>>,
    best_perm: Vec<usize>,
}

impl Searcher<'_> {
    fn descend(&mut self, colors: Vec<usize>, classes: usize) {
        let n = self.g.n();
        if classes == n {
            let code = pack_code(self.g, &colors);
            if self.best.as_ref().is_none_or(|b| code < *b) {
                self.best = Some(code);
                self.best_perm = colors;
            }
            return;
        }
        // Branch on the lowest-numbered colour class of size ≥ 2; the
        // class is determined by the isomorphism type because colours
        // are refinement ranks.
        let target = (0..n)
            .map(|v| colors[v])
            .filter(|&c| colors.iter().filter(|&&d| d == c).count() >= 2)
            .min()
            .expect("a non-discrete partition has a class of size at least 2");
        for v in 0..n {
            if colors[v] != target {
                continue;
            }
            let mut child: Vec<usize> = colors
                .iter()
                .map(|&c| if c > target { c + 1 } else { c })
                .collect();
            for (u, c) in child.iter_mut().enumerate() {
                if colors[u] == target && u != v {
                    *c = target + 1;
                }
            }
            let classes = refine(self.g, &mut child);
            self.descend(child, classes);
        }
    }
}

/// Iterated colour refinement: vertices are re-ranked by (own colour,
/// sorted multiset of neighbour colours) until the number of classes
/// stabilises. Returns the class count; colours are ranks 0..classes.
fn refine(g: &Graph, colors: &mut [usize]) -> usize {
    let n = g.n();
    let mut classes = normalize(colors);
    loop {
        let mut signatures: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                around.sort_unstable();
                (colors[v], around, v)
            })
            .collect();
        signatures.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (signatures[i].0, &signatures[i].1) != (signatures[i - 1].0, &signatures[i - 1].1) {
                rank += 1;
            }
            colors[signatures[i].2] = rank;
        }
        let refined = rank + 1;
        if refined == classes {
            return classes;
        }
        classes = refined;
    }
}

/// Renumbers colours to dense ranks preserving order; returns the
/// class count.
fn normalize(colors: &mut [usize]) -> usize {
    let mut sorted: Vec<usize> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for c in colors.iter_mut() {
        *c = sorted.binary_search(c).expect("own colour present");
    }
    sorted.len()
}

/// Upper-triangle bits of `g` relabelled by `perm` (vertex v lands at
/// position perm[v]), row-major (0,1), (0,2), …, MSB-first per word.
fn pack_code(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64)];
    let mut inverse = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inverse[p] = v;
    }
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(inverse[i], inverse[j]) {
                code[t / 64] |= 1u64 << (63 - t % 64);
            }
            t += 1;
        }
    }
    code
}
