//! Ground truth at desk scale: isomorph-free enumeration, exact
//! optima over all small graphs, a simulated-annealing heuristic for
//! medium sizes, and the quasi-clique versus quasi-star scanner.

pub mod anneal;
pub mod canon;
pub mod enumerate;
pub mod phase;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::BigCount;

pub use anneal::{local_search_satex, LocalSearchOptions};
pub use canon::{canonical_code, canonical_code_compact, canonical_form};
pub use enumerate::{enumerate_nonisomorphic_graphs, exact_generalized_turan, exact_satex};
pub use phase::{phase_transition_scan, PhasePoint, PhaseScan, PhaseWinner};

/// Outcome of an exact or heuristic optimisation run. The witness is
/// re-verified by direct counting before any constructor returns it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub optimum: BigCount,
    /// Optimal graph; in canonical form for exact searches.
    pub witness: Graph,
    /// Graphs examined (canonical classes for exact runs, edge-toggle
    /// proposals for heuristic runs).
    pub explored: u64,
    /// True only for exhaustive searches.
    pub exact: bool,
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("SearchResult", 4)?;
        state.serialize_field("optimum", &self.optimum.to_string())?;
        state.serialize_field("witness", &crate::graph6::encode(&self.witness))?;
        state.serialize_field("explored", &self.explored)?;
        state.serialize_field("exact", &self.exact)?;
        state.end()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchError {
    /// Exhaustive enumeration refused; callers should switch to
    /// [`local_search_satex`].
    TooLarge { n: usize, limit: usize },
    /// No n-vertex graph satisfies the copy constraint.
    Infeasible { requested: BigCount, max_copies: BigCount },
    /// The heuristic exhausted its budget without reaching a feasible
    /// state; the shortfall is the smallest constraint deficit seen.
    InfeasibleSoFar { shortfall: f64 },
    BadParameter { detail: String },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::TooLarge { n, limit } => write!(
                f,
                "exhaustive search is limited to n ≤ {limit} (got n = {n}); \
                 use local_search_satex for larger instances"
            ),
            SearchError::Infeasible { requested, max_copies } => write!(
                f,
                "infeasible copy budget: requested {requested} but the maximum attainable is {max_copies}"
            ),
            SearchError::InfeasibleSoFar { shortfall } => write!(
                f,
                "no feasible graph found within budget (best constraint shortfall {shortfall})"
            ),
            SearchError::BadParameter { detail } => write!(f, "{detail}"),
        }
    }
}

impl std::error::Error for SearchError {}
