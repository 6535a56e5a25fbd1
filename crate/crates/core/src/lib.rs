//! Workbench for the supersaturation-extremal function
//! `satex(n, F: m, G)`: the minimum number of copies of a pattern `G`
//! over all n-vertex graphs carrying at least `m` copies of a pattern `F`.
//!
//! The crate is organised around a small exact core and analysis layers
//! on top of it:
//!
//! * [`graph`] / [`pattern`] / [`count`] — bitset graphs, pattern
//!   specifications and exact (big-integer) subgraph counting;
//! * [`graph6`] — codec for the standard printable graph interchange
//!   format;
//! * [`families`] — extremal constructions (quasi-cliques, Turán
//!   graphs, bipartite incidence graphs) and closed-form copy counts;
//! * [`bounds`] — certified and asymptotic lower-bound evaluators for
//!   supersaturated copy counts;
//! * [`search`] — isomorph-free enumeration, exact optimisation of
//!   satex at desk scale and a simulated-annealing heuristic;
//! * [`berge`] — hypergraph Berge-copy counting and the sandwich
//!   inequalities tying hypergraph satex values to graph ones.

pub mod berge;
pub mod bounds;
pub mod combinatorics;
pub mod count;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod pattern;
pub mod search;

/// Exact nonnegative count; all copy counts are reported in this type.
pub type BigCount = num::BigUint;

pub use count::{codegree_vector, count_in_complete, count_subgraphs, count_weighted_subgraphs, EdgeWeighting};
pub use graph::Graph;
pub use pattern::PatternSpec;
