//! Simulated annealing over edge toggles: satisfy the source-copy
//! constraint, then minimise the target count. Results are upper
//! bounds witnessed by a concrete graph, never exact values.

use num::{ToPrimitive, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{SearchError, SearchResult};
use crate::count::{count_in_complete, count_subgraphs, count_subgraphs_through_edge};
use crate::graph::Graph;
use crate::pattern::PatternSpec;
use crate::BigCount;

/// Energy offset separating infeasible states from every feasible one.
const INFEASIBLE_OFFSET: f64 = 1e18;

#[derive(Debug, Clone, PartialEq)]
pub struct LocalSearchOptions {
    /// Total number of edge-toggle proposals across all restarts.
    pub budget: u64,
    pub seed: u64,
    pub restarts: u32,
    pub initial_temperature: f64,
    pub cooling: f64,
}

impl Default for LocalSearchOptions {
    fn default() -> Self {
        LocalSearchOptions {
            budget: 200_000,
            seed: 0,
            restarts: 8,
            initial_temperature: 1.0,
            cooling: 0.999,
        }
    }
}

/// Heuristic upper bound for the minimum of `target` copies subject to
/// at least `m` copies of `source`, on `n` vertices. Deterministic for
/// a fixed seed; restarts run in parallel and are merged by
/// (value, restart index).
pub fn local_search_satex(
    n: usize,
    source: &PatternSpec,
    m: &BigCount,
    target: &PatternSpec,
    options: &LocalSearchOptions,
) -> Result<SearchResult, SearchError> {
    if options.budget == 0 || options.restarts == 0 {
        return Err(SearchError::BadParameter {
            detail: "local search needs a positive budget and at least one restart".to_owned(),
        });
    }
    if !(options.cooling > 0.0 && options.cooling <= 1.0) || options.initial_temperature <= 0.0 {
        return Err(SearchError::BadParameter {
            detail: "cooling must lie in (0, 1] and the initial temperature must be positive".to_owned(),
        });
    }
    let max_copies = count_in_complete(source, n as u64);
    if *m > max_copies {
        return Err(SearchError::Infeasible { requested: m.clone(), max_copies });
    }
    let empty = Graph::empty(n);
    if count_subgraphs(source, &empty) >= *m {
        // The target count is monotone under edge insertion, so the
        // empty graph is optimal whenever it is feasible.
        let optimum = count_subgraphs(target, &empty);
        return Ok(SearchResult { optimum, witness: empty, explored: 0, exact: false });
    }
    let steps = (options.budget / u64::from(options.restarts)).max(1);
    let runs: Vec<Restart> = (0..options.restarts)
        .into_par_iter()
        .map(|index| run_restart(n, source, m, target, options, index, steps))
        .collect();
    let explored: u64 = runs.iter().map(|r| r.explored).sum();
    let best = runs
        .into_iter()
        .enumerate()
        .filter_map(|(i, r)| r.best.map(|(value, graph)| (value, i, graph)))
        .min_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    match best {
        Some((optimum, _, witness)) => {
            assert!(count_subgraphs(source, &witness) >= *m, "witness lost feasibility");
            assert_eq!(count_subgraphs(target, &witness), optimum, "stale incremental count");
            Ok(SearchResult { optimum, witness, explored, exact: false })
        }
        None => {
            let shortfall = m.to_f64().unwrap_or(f64::INFINITY);
            Err(SearchError::InfeasibleSoFar { shortfall })
        }
    }
}

struct Restart {
    best: Option<(BigCount, Graph)>,
    explored: u64,
}

struct State {
    graph: Graph,
    source_count: BigCount,
    target_count: BigCount,
}

impl State {
    fn new(graph: Graph, source: &PatternSpec, target: &PatternSpec) -> State {
        let source_count = count_subgraphs(source, &graph);
        let target_count = count_subgraphs(target, &graph);
        State { graph, source_count, target_count }
    }
}

fn energy(source_count: &BigCount, target_count: &BigCount, m: &BigCount) -> f64 {
    if source_count < m {
        let shortfall = (m - source_count).to_f64().unwrap_or(f64::MAX / 4.0);
        INFEASIBLE_OFFSET + shortfall
    } else {
        target_count.to_f64().unwrap_or(f64::MAX / 4.0)
    }
}

fn run_restart(
    n: usize,
    source: &PatternSpec,
    m: &BigCount,
    target: &PatternSpec,
    options: &LocalSearchOptions,
    index: u32,
    steps: u64,
) -> Restart {
    let mut rng =
        ChaCha8Rng::seed_from_u64(options.seed ^ (u64::from(index).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
    let start = if index == 0 {
        Graph::complete(n)
    } else {
        let p = 0.25 + 0.5 * f64::from(index - 1) / f64::from(options.restarts.max(2) - 1);
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    };
    let mut state = State::new(start, source, target);
    let mut best: Option<(BigCount, Graph)> = feasible_snapshot(&state, m);
    let mut temperature = options.initial_temperature;
    let mut explored = 0u64;
    let mut since_acceptance = 0u64;
    let mut current_energy = energy(&state.source_count, &state.target_count, m);
    while explored < steps {
        explored += 1;
        let (u, v) = random_pair(&mut rng, n);
        let removing = state.graph.has_edge(u, v);
        if !removing {
            state.graph.add_edge(u, v);
        }
        let source_delta = count_subgraphs_through_edge(source, &state.graph, u, v);
        let target_delta = count_subgraphs_through_edge(target, &state.graph, u, v);
        let (next_source, next_target) = if removing {
            (&state.source_count - &source_delta, &state.target_count - &target_delta)
        } else {
            (&state.source_count + &source_delta, &state.target_count + &target_delta)
        };
        let next_energy = energy(&next_source, &next_target, m);
        let delta = next_energy - current_energy;
        let accept = delta <= 0.0 || rng.gen::<f64>() < (-delta / temperature).exp();
        if accept {
            if removing {
                state.graph.remove_edge(u, v);
            }
            state.source_count = next_source;
            state.target_count = next_target;
            current_energy = next_energy;
            since_acceptance = 0;
            if state.source_count >= *m
                && best.as_ref().is_none_or(|(b, _)| state.target_count < *b)
            {
                best = Some((state.target_count.clone(), state.graph.clone()));
            }
        } else {
            if !removing {
                state.graph.remove_edge(u, v);
            }
            since_acceptance += 1;
        }
        temperature = (temperature * options.cooling).max(1e-6);
        if since_acceptance > 2_000 {
            // Stagnation: reheat rather than waste the remaining budget
            // on rejected proposals.
            temperature = options.initial_temperature;
            since_acceptance = 0;
        }
    }
    if let Some((_, graph)) = &best {
        let polished = greedy_descent(graph.clone(), source, m, target, steps, &mut explored);
        let polished_value = polished.1.clone();
        if polished_value < best.as_ref().expect("best set").0 {
            best = Some((polished_value, polished.0));
        }
    }
    Restart { best, explored }
}

/// Steepest-acceptable descent from a feasible graph: apply any toggle
/// that keeps feasibility and strictly lowers the target count, until
/// a full sweep finds none or the step allowance runs out.
fn greedy_descent(
    mut graph: Graph,
    source: &PatternSpec,
    m: &BigCount,
    target: &PatternSpec,
    allowance: u64,
    explored: &mut u64,
) -> (Graph, BigCount) {
    let n = graph.n();
    let mut source_count = count_subgraphs(source, &graph);
    let mut target_count = count_subgraphs(target, &graph);
    let mut spent = 0u64;
    let mut improved = true;
    while improved && spent < allowance {
        improved = false;
        'sweep: for u in 0..n {
            for v in u + 1..n {
                if spent >= allowance {
                    break 'sweep;
                }
                spent += 1;
                if !graph.has_edge(u, v) {
                    continue;
                }
                let source_delta = count_subgraphs_through_edge(source, &graph, u, v);
                if &source_count - &source_delta < *m {
                    continue;
                }
                let target_delta = count_subgraphs_through_edge(target, &graph, u, v);
                if target_delta.is_zero() {
                    continue;
                }
                graph.remove_edge(u, v);
                source_count -= source_delta;
                target_count -= target_delta;
                improved = true;
            }
        }
    }
    *explored += spent;
    (graph, target_count)
}

fn feasible_snapshot(state: &State, m: &BigCount) -> Option<(BigCount, Graph)> {
    (state.source_count >= *m).then(|| (state.target_count.clone(), state.graph.clone()))
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    debug_assert!(n >= 2);
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u.min(v), u.max(v))
}
