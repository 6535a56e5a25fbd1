//! Pattern specifications: the small graphs whose copies get counted.
//!
//! Closed-form variants carry their own automorphism counts so the
//! counting kernels can convert injective embeddings into unlabeled
//! copies; explicit patterns fall back to a brute-force automorphism
//! scan, which is fine at pattern scale (≤ 10 vertices or so).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::factorial;
use crate::graph::Graph;
use crate::BigCount;

/// A pattern graph, either one of the closed-form families or an
/// explicit small graph.
///
/// Path and cycle parameters count vertices: `Path(3)` is the cherry
/// P_3 and `Cycle(4)` the quadrilateral C_4. `Star(s)` is K_{1,s} on
/// s + 1 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "pattern", content = "params", rename_all = "snake_case")]
pub enum PatternSpec {
    Clique(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Explicit(Graph),
}

/// Structurally invalid pattern parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternError {
    CycleTooShort { k: usize },
    EmptyBipartiteSide,
    Unparsable { text: String },
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::CycleTooShort { k } => write!(f, "cycle length {k} below 3"),
            PatternError::EmptyBipartiteSide => write!(f, "complete bipartite side of size 0"),
            PatternError::Unparsable { text } => write!(f, "unrecognised pattern {text:?}"),
        }
    }
}

impl std::error::Error for PatternError {}

impl PatternSpec {
    /// Structural validity; counting routines assume this holds.
    pub fn validate(&self) -> Result<(), PatternError> {
        match *self {
            PatternSpec::Cycle(k) if k < 3 => Err(PatternError::CycleTooShort { k }),
            PatternSpec::CompleteBipartite(a, b) if a == 0 || b == 0 => {
                Err(PatternError::EmptyBipartiteSide)
            }
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            PatternSpec::Clique(k) | PatternSpec::Path(k) | PatternSpec::Cycle(k) => k,
            PatternSpec::Star(s) => s + 1,
            PatternSpec::CompleteBipartite(a, b) => a + b,
            PatternSpec::Explicit(ref g) => g.n(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match *self {
            PatternSpec::Clique(k) => k * k.saturating_sub(1) / 2,
            PatternSpec::Path(k) => k.saturating_sub(1),
            PatternSpec::Cycle(k) => k,
            PatternSpec::Star(s) => s,
            PatternSpec::CompleteBipartite(a, b) => a * b,
            PatternSpec::Explicit(ref g) => g.edge_count(),
        }
    }

    /// The pattern as an explicit graph on `0..vertex_count()`.
    pub fn to_graph(&self) -> Graph {
        match *self {
            PatternSpec::Clique(k) => Graph::complete(k),
            PatternSpec::Path(k) => {
                let mut g = Graph::empty(k);
                for v in 1..k {
                    g.add_edge(v - 1, v);
                }
                g
            }
            PatternSpec::Cycle(k) => {
                debug_assert!(k >= 3);
                let mut g = Graph::empty(k);
                for v in 1..k {
                    g.add_edge(v - 1, v);
                }
                g.add_edge(k - 1, 0);
                g
            }
            PatternSpec::Star(s) => {
                let mut g = Graph::empty(s + 1);
                for v in 1..=s {
                    g.add_edge(0, v);
                }
                g
            }
            PatternSpec::CompleteBipartite(a, b) => {
                let mut g = Graph::empty(a + b);
                for u in 0..a {
                    for v in a..a + b {
                        g.add_edge(u, v);
                    }
                }
                g
            }
            PatternSpec::Explicit(ref g) => g.clone(),
        }
    }

    /// Automorphism count of the pattern graph.
    ///
    /// Closed forms per variant; `Star(1)` is the single edge, whose
    /// group has order 2 even though the leaves-only formula says 1.
    pub fn automorphism_count(&self) -> BigCount {
        match *self {
            PatternSpec::Clique(k) => factorial(k as u64),
            PatternSpec::Path(0) => factorial(0),
            PatternSpec::Path(1) => factorial(1),
            PatternSpec::Path(_) => BigCount::from(2u32),
            PatternSpec::Cycle(k) => BigCount::from(2 * k as u64),
            PatternSpec::Star(1) => BigCount::from(2u32),
            PatternSpec::Star(s) => factorial(s as u64),
            PatternSpec::CompleteBipartite(a, b) => {
                let base = factorial(a as u64) * factorial(b as u64);
                if a == b {
                    base * 2u32
                } else {
                    base
                }
            }
            PatternSpec::Explicit(ref g) => brute_force_automorphisms(g),
        }
    }

    /// Whether the pattern has a vertex of degree 0.
    pub fn has_isolated_vertex(&self) -> bool {
        match *self {
            PatternSpec::Clique(k) => k == 1,
            PatternSpec::Path(k) => k == 1,
            PatternSpec::Cycle(_) => false,
            PatternSpec::Star(s) => s == 0,
            PatternSpec::CompleteBipartite(..) => false,
            PatternSpec::Explicit(ref g) => (0..g.n()).any(|v| g.degree(v) == 0),
        }
    }
}

/// |Aut(g)| by scanning all vertex permutations.
pub fn brute_force_automorphisms(g: &Graph) -> BigCount {
    let n = g.n();
    if n == 0 {
        return BigCount::from(1u32);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    permute_count(g, &mut perm, 0, &mut count);
    BigCount::from(count)
}

fn permute_count(g: &Graph, perm: &mut Vec<usize>, depth: usize, count: &mut u64) {
    let n = g.n();
    if depth == n {
        let ok = (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(perm[u], perm[v])));
        if ok {
            *count += 1;
        }
        return;
    }
    for i in depth..n {
        perm.swap(depth, i);
        // Prune: the image of `depth` must match adjacency to earlier images.
        let consistent = (0..depth).all(|u| g.has_edge(u, depth) == g.has_edge(perm[u], perm[depth]));
        if consistent {
            permute_count(g, perm, depth + 1, count);
        }
        perm.swap(depth, i);
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternSpec::Clique(k) => write!(f, "K{k}"),
            PatternSpec::Path(k) => write!(f, "P{k}"),
            PatternSpec::Cycle(k) => write!(f, "C{k}"),
            PatternSpec::Star(s) => write!(f, "S{s}"),
            PatternSpec::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            PatternSpec::Explicit(ref g) => write!(f, "g6:{}", crate::graph6::encode(g)),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = PatternError;

    /// Parses the short names used on the command line: `K4`, `P3`,
    /// `C5`, `S2`, `K2,3`, or `g6:<graph6>` for an explicit pattern.
    fn from_str(text: &str) -> Result<PatternSpec, PatternError> {
        let unparsable = || PatternError::Unparsable { text: text.to_owned() };
        if let Some(g6) = text.strip_prefix("g6:") {
            let g = crate::graph6::decode(g6).map_err(|_| unparsable())?;
            return Ok(PatternSpec::Explicit(g));
        }
        let (head, rest) = text.split_at(text.len().min(1));
        let spec = match head {
            "K" => {
                if let Some((a, b)) = rest.split_once(',') {
                    PatternSpec::CompleteBipartite(
                        a.parse().map_err(|_| unparsable())?,
                        b.parse().map_err(|_| unparsable())?,
                    )
                } else {
                    PatternSpec::Clique(rest.parse().map_err(|_| unparsable())?)
                }
            }
            "P" => PatternSpec::Path(rest.parse().map_err(|_| unparsable())?),
            "C" => PatternSpec::Cycle(rest.parse().map_err(|_| unparsable())?),
            "S" => PatternSpec::Star(rest.parse().map_err(|_| unparsable())?),
            _ => return Err(unparsable()),
        };
        spec.validate().map_err(|_| unparsable())?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;

    fn aut(p: &PatternSpec) -> u64 {
        p.automorphism_count().to_u64().unwrap()
    }

    #[test]
    fn closed_form_automorphism_counts() {
        assert_eq!(aut(&PatternSpec::Clique(4)), 24);
        assert_eq!(aut(&PatternSpec::Path(4)), 2);
        assert_eq!(aut(&PatternSpec::Cycle(5)), 10);
        assert_eq!(aut(&PatternSpec::Star(3)), 6);
        assert_eq!(aut(&PatternSpec::CompleteBipartite(2, 3)), 12);
        assert_eq!(aut(&PatternSpec::CompleteBipartite(2, 2)), 8);
    }

    #[test]
    fn closed_forms_match_brute_force_on_the_explicit_graph() {
        let specs = [
            PatternSpec::Clique(1),
            PatternSpec::Clique(4),
            PatternSpec::Path(1),
            PatternSpec::Path(2),
            PatternSpec::Path(5),
            PatternSpec::Cycle(3),
            PatternSpec::Cycle(6),
            PatternSpec::Star(1),
            PatternSpec::Star(4),
            PatternSpec::CompleteBipartite(1, 1),
            PatternSpec::CompleteBipartite(2, 2),
            PatternSpec::CompleteBipartite(2, 3),
        ];
        for spec in &specs {
            assert_eq!(
                spec.automorphism_count(),
                brute_force_automorphisms(&spec.to_graph()),
                "aut mismatch for {spec}"
            );
        }
    }

    #[test]
    fn explicit_automorphisms_divide_vertex_factorial() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let a = brute_force_automorphisms(&g).to_u64().unwrap();
        assert_eq!(a, 8);
        assert_eq!(24 % a, 0);
    }

    #[test]
    fn vertex_and_edge_counts() {
        assert_eq!(PatternSpec::Star(3).vertex_count(), 4);
        assert_eq!(PatternSpec::Star(3).edge_count(), 3);
        assert_eq!(PatternSpec::Cycle(4).edge_count(), 4);
        assert_eq!(PatternSpec::CompleteBipartite(2, 3).edge_count(), 6);
        assert_eq!(PatternSpec::Path(1).edge_count(), 0);
    }

    #[test]
    fn parse_round_trip() {
        for text in ["K4", "P3", "C5", "S2", "K2,3"] {
            let p: PatternSpec = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!("C2".parse::<PatternSpec>().is_err());
        assert!("K0,2".parse::<PatternSpec>().is_err());
        assert!("Q7".parse::<PatternSpec>().is_err());
        assert!("K".parse::<PatternSpec>().is_err());
        let explicit: PatternSpec = "g6:A_".parse().unwrap();
        assert_eq!(explicit.vertex_count(), 2);
        assert_eq!(explicit.edge_count(), 1);
    }

    #[test]
    fn isolated_vertex_detection() {
        assert!(PatternSpec::Clique(1).has_isolated_vertex());
        assert!(!PatternSpec::Path(4).has_isolated_vertex());
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(PatternSpec::Explicit(g).has_isolated_vertex());
    }
}
