//! Batch front door for the counting, bounds, search and Berge
//! modules: one subcommand per library entry point, JSON or CSV on
//! stdout, diagnostics on stderr. This binary contains no numerical
//! logic of its own; every value in its output is produced by a
//! library call and serialized unchanged.
//!
//! Exit codes: 0 on success, 2 on a parameter error, 3 on a size
//! refusal, 4 when a sweep finds a certified bound above an exact
//! value (a soundness alarm: certified bounds are theorems, so this
//! signals an implementation bug, not a property of the inputs).

use std::fmt;
use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::ToPrimitive;
use serde::Deserialize;
use serde_json::{Map, Value};

use satex_core::berge::{
    berge_counts, berge_sandwich_check, brute_satex_berge, complete_uniform, triangle_gadget,
    BergeError, Hypergraph,
};
use satex_core::bounds::{
    blakley_roy_check, bollobas_interpolated_bound, c2k_k2t_reference, csillag1_lower_bound,
    fkr_disjoint_pairs_bound, kqt_projection_bound, kruskal_katona_bound, lemma_powermean_check,
    pathcycle_corollary_bound, pathcycle_lower_bound, pathpath_main_term, pk2t_lower_bound,
    reiher_wagner_max_stars, spanning_satex_estimate, BoundError, BoundKind, BoundReport,
    BoundValue, InequalityCheck,
};
use satex_core::families::{build_family, FamilyError, FamilySpec};
use satex_core::graph6::{self, Graph6Error};
use satex_core::pattern::PatternError;
use satex_core::search::{
    exact_generalized_turan, exact_satex, local_search_satex, phase_transition_scan,
    LocalSearchOptions, SearchError,
};
use satex_core::{count_subgraphs, BigCount, Graph, PatternSpec};

/// Default ceiling for exhaustive searches; the library refuses
/// larger instances regardless of flags.
const EXACT_GUARD: usize = 9;
/// Default ceiling for heuristic search and plain counting.
const LARGE_GUARD: usize = 32;
/// Slack for comparing a floating-point bound against an exact count.
const RELATIVE_TOLERANCE: f64 = 1e-9;

// ============================================================
// Exit codes and the error channel
// ============================================================

#[derive(Debug)]
enum CliError {
    /// Unusable input: exit 2.
    Parameter(String),
    /// Instance too large for the requested mode: exit 3.
    Refusal(String),
    /// A certified bound exceeded an exact value: exit 4.
    Alarm(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parameter(_) => 2,
            CliError::Refusal(_) => 3,
            CliError::Alarm(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parameter(detail)
            | CliError::Refusal(detail)
            | CliError::Alarm(detail) => write!(f, "{detail}"),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(err: SearchError) -> CliError {
        match err {
            SearchError::TooLarge { .. } | SearchError::InfeasibleSoFar { .. } => {
                CliError::Refusal(err.to_string())
            }
            SearchError::Infeasible { .. } | SearchError::BadParameter { .. } => {
                CliError::Parameter(err.to_string())
            }
        }
    }
}

impl From<BoundError> for CliError {
    fn from(err: BoundError) -> CliError {
        CliError::Parameter(err.to_string())
    }
}

impl From<BergeError> for CliError {
    fn from(err: BergeError) -> CliError {
        match err {
            BergeError::TooLarge { .. } | BergeError::BudgetExceeded { .. } => {
                CliError::Refusal(err.to_string())
            }
            BergeError::BadHypergraph { .. } | BergeError::Infeasible { .. } => {
                CliError::Parameter(err.to_string())
            }
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(err: FamilyError) -> CliError {
        CliError::Parameter(err.to_string())
    }
}

impl From<PatternError> for CliError {
    fn from(err: PatternError) -> CliError {
        CliError::Parameter(err.to_string())
    }
}

impl From<Graph6Error> for CliError {
    fn from(err: Graph6Error) -> CliError {
        CliError::Parameter(format!("bad graph6 input: {err}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> CliError {
        CliError::Parameter(format!("CSV output failed: {err}"))
    }
}

// ============================================================
// Argument grammar
// ============================================================

#[derive(Parser)]
#[command(
    name = "satex",
    version,
    about = "Subgraph counting, extremal bounds, exact and heuristic search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for every randomised component.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for the global pool (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Replace the default size guard with this vertex ceiling.
    #[arg(long = "max-n", global = true)]
    max_n: Option<usize>,

    /// Bypass the size guards entirely.
    #[arg(long, global = true)]
    force: bool,

    /// Omit the timestamp field so reruns are byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Count copies of a pattern in a host graph.
    Count(CountArgs),
    /// Build a named family graph and print its graph6 code.
    Build(BuildArgs),
    /// Evaluate a named bound or run a named inequality check.
    Bound(BoundArgs),
    /// Minimise target copies over graphs with a source-copy budget.
    Satex(SatexArgs),
    /// Maximise pattern copies over graphs avoiding a forbidden one.
    Turan(TuranArgs),
    /// Scan star budgets for the quasi-clique/quasi-star crossover.
    Phase(PhaseArgs),
    /// Berge copy counts, minimisation, or sandwich comparisons.
    Berge(BergeArgs),
    /// Run a JSON batch of bound-versus-exact comparisons as CSV.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct CountArgs {
    /// Pattern name: K4, P3, C5, S2, K2,3 or g6:<code>.
    #[arg(long)]
    pattern: String,
    /// Host graph: a graph6 string, or @file.json with {"n", "edges"}.
    #[arg(long)]
    host: String,
}

#[derive(Args)]
struct BuildArgs {
    /// Family spec as JSON, or @file.json; e.g.
    /// {"family":"furedi","params":{"p":5,"r":2}}.
    #[arg(long)]
    family: String,
    /// Number of vertices to build on.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct BoundArgs {
    /// Evaluator name; run with a missing name to list the choices.
    #[arg(long)]
    name: String,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    /// Copy budget; parsed as an integer or a float per evaluator.
    #[arg(long)]
    m: Option<String>,
    /// Number of sets, for the disjoint-pairs bound.
    #[arg(long = "set-count")]
    set_count: Option<f64>,
    /// Comma-separated degree sequence for the power-mean check.
    #[arg(long)]
    degrees: Option<String>,
    /// Host graph (graph6 or @file.json) for the walk-count check.
    #[arg(long)]
    host: Option<String>,
    /// Comma-separated weight vector for the walk-count check
    /// (default: all ones).
    #[arg(long)]
    vector: Option<String>,
    /// Spanned pattern for the tiling estimate.
    #[arg(long)]
    span: Option<String>,
    /// Tile pattern for the tiling estimate.
    #[arg(long)]
    tile: Option<String>,
}

#[derive(Args)]
struct SatexArgs {
    #[arg(long)]
    n: usize,
    /// Pattern whose copy count is constrained from below.
    #[arg(long)]
    source: String,
    /// Copy budget (decimal integer, arbitrary size).
    #[arg(long)]
    m: String,
    /// Pattern whose copy count is minimised.
    #[arg(long)]
    target: String,
    /// Use simulated annealing instead of exhaustive enumeration.
    #[arg(long)]
    heuristic: bool,
    /// Total edge-toggle proposals for the heuristic.
    #[arg(long)]
    budget: Option<u64>,
    /// Independent annealing restarts.
    #[arg(long)]
    restarts: Option<u32>,
}

#[derive(Args)]
struct TuranArgs {
    #[arg(long)]
    n: usize,
    /// Pattern whose copy count is maximised.
    #[arg(long)]
    pattern: String,
    /// Pattern that must not appear at all.
    #[arg(long)]
    forbidden: String,
}

#[derive(Args)]
struct PhaseArgs {
    #[arg(long)]
    n: usize,
    /// Star arity of the source pattern K_{1,s}.
    #[arg(long)]
    s: usize,
    /// First side of the target biclique K_{a,b}.
    #[arg(long)]
    a: usize,
    /// Second side of the target biclique K_{a,b}.
    #[arg(long)]
    b: usize,
    /// Comma-separated star budgets to scan.
    #[arg(long = "m-grid")]
    m_grid: String,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("mode").required(true).multiple(false)))]
struct BergeArgs {
    /// Report the three Berge copy counts of one hypergraph.
    #[arg(long = "n1n2n3", group = "mode")]
    counts: bool,
    /// Minimise one Berge count over all hypergraphs with m edges.
    #[arg(long, group = "mode")]
    minimise: bool,
    /// Compare graph and Berge minima at matching budgets.
    #[arg(long, group = "mode")]
    sandwich: bool,
    /// Hypergraph: complete-{r}-uniform-{n}, gadget-{n} or @file.json.
    #[arg(long)]
    hyper: Option<String>,
    /// Graph pattern to count Berge copies of.
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Hyperedge budget for minimisation and sandwich modes.
    #[arg(long)]
    m: Option<usize>,
    /// Berge counting semantics for --minimise: 1, 2 or 3.
    #[arg(long, default_value_t = 2)]
    semantics: u8,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON array of job objects, inline or @file.json.
    #[arg(long)]
    jobs: String,
}

// ============================================================
// Run context and output plumbing
// ============================================================

struct RunContext {
    seed: u64,
    force: bool,
    max_n: Option<usize>,
    no_timestamp: bool,
}

impl RunContext {
    /// Applies the size guard for the given mode; `--max-n` replaces
    /// the default ceiling and `--force` skips the check.
    fn guard(&self, n: usize, default_limit: usize, mode: &str, remedy: &str) -> Result<(), CliError> {
        let limit = self.max_n.unwrap_or(default_limit);
        if !self.force && n > limit {
            return Err(CliError::Refusal(format!(
                "{mode} is guarded at n <= {limit} (got n = {n}); {remedy}"
            )));
        }
        Ok(())
    }
}

fn unix_timestamp() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Prints the single top-level JSON object for this run. Keys are
/// emitted in sorted order, so equal payloads give equal bytes.
fn emit_json(ctx: &RunContext, command: &str, payload: Map<String, Value>) {
    let mut object = Map::new();
    object.insert("command".to_owned(), Value::from(command));
    if !ctx.no_timestamp {
        object.insert("timestamp".to_owned(), Value::from(unix_timestamp()));
    }
    for (key, value) in payload {
        object.insert(key, value);
    }
    println!("{}", Value::Object(object));
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize infallibly")
}

// ============================================================
// Input parsing
// ============================================================

/// Returns the argument itself, or the contents of the file it names
/// when prefixed with '@'.
fn read_arg_text(raw: &str) -> Result<String, CliError> {
    match raw.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|err| CliError::Parameter(format!("cannot read {path}: {err}"))),
        None => Ok(raw.to_owned()),
    }
}

fn parse_pattern(raw: &str) -> Result<PatternSpec, CliError> {
    raw.parse::<PatternSpec>().map_err(CliError::from)
}

fn parse_bigcount(raw: &str) -> Result<BigCount, CliError> {
    raw.parse::<BigCount>()
        .map_err(|err| CliError::Parameter(format!("bad copy budget {raw:?}: {err}")))
}

fn parse_f64(raw: &str, what: &str) -> Result<f64, CliError> {
    raw.parse::<f64>()
        .map_err(|err| CliError::Parameter(format!("bad {what} {raw:?}: {err}")))
}

fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> Result<Vec<T>, CliError>
where
    T::Err: fmt::Display,
{
    raw.split(',')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.parse::<T>()
                .map_err(|err| CliError::Parameter(format!("bad {what} entry {part:?}: {err}")))
        })
        .collect()
}

/// Loads a host graph from a graph6 string or an @file.json with
/// {"n": ..., "edges": [[u, v], ...]}.
fn load_graph(raw: &str) -> Result<Graph, CliError> {
    match raw.strip_prefix('@') {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|err| CliError::Parameter(format!("cannot read {path}: {err}")))?;
            serde_json::from_str::<Graph>(&text)
                .map_err(|err| CliError::Parameter(format!("bad graph JSON in {path}: {err}")))
        }
        None => graph6::decode(raw).map_err(CliError::from),
    }
}

/// Loads a hypergraph from complete-{r}-uniform-{n}, gadget-{size},
/// or an @file.json with {"n", "r", "edges"}.
fn load_hypergraph(raw: &str) -> Result<Hypergraph, CliError> {
    if let Some(path) = raw.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|err| CliError::Parameter(format!("cannot read {path}: {err}")))?;
        return serde_json::from_str::<Hypergraph>(&text)
            .map_err(|err| CliError::Parameter(format!("bad hypergraph JSON in {path}: {err}")));
    }
    let bad = || {
        CliError::Parameter(format!(
            "bad hypergraph {raw:?}: expected complete-{{r}}-uniform-{{n}}, gadget-{{size}} or @file.json"
        ))
    };
    if let Some(rest) = raw.strip_prefix("complete-") {
        let (r_text, n_text) = rest.split_once("-uniform-").ok_or_else(bad)?;
        let r = r_text.parse::<usize>().map_err(|_| bad())?;
        let n = n_text.parse::<usize>().map_err(|_| bad())?;
        return complete_uniform(n, r).map_err(CliError::from);
    }
    if let Some(size_text) = raw.strip_prefix("gadget-") {
        let size = size_text.parse::<usize>().map_err(|_| bad())?;
        return Ok(triangle_gadget(size));
    }
    Err(bad())
}

fn require<T>(value: Option<T>, flag: &str, name: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Parameter(format!("bound {name:?} requires --{flag}")))
}

// ============================================================
// Subcommand handlers
// ============================================================

fn run_count(ctx: &RunContext, args: &CountArgs) -> Result<(), CliError> {
    let host = load_graph(&args.host)?;
    ctx.guard(host.n(), LARGE_GUARD, "counting", "pass --force to override")?;
    let pattern = parse_pattern(&args.pattern)?;
    let count = count_subgraphs(&pattern, &host);
    let mut payload = Map::new();
    payload.insert("pattern".to_owned(), Value::from(args.pattern.clone()));
    payload.insert("host".to_owned(), Value::from(graph6::encode(&host)));
    payload.insert("n".to_owned(), Value::from(host.n()));
    payload.insert("count".to_owned(), Value::from(count.to_string()));
    emit_json(ctx, "count", payload);
    Ok(())
}

fn run_build(ctx: &RunContext, args: &BuildArgs) -> Result<(), CliError> {
    let text = read_arg_text(&args.family)?;
    let spec: FamilySpec = serde_json::from_str(&text)
        .map_err(|err| CliError::Parameter(format!("bad family spec: {err}")))?;
    let graph = build_family(&spec, args.n)?;
    let mut payload = Map::new();
    payload.insert("family".to_owned(), to_json(&spec));
    payload.insert("n".to_owned(), Value::from(graph.n()));
    payload.insert("edges".to_owned(), Value::from(graph.edge_count()));
    payload.insert("graph6".to_owned(), Value::from(graph6::encode(&graph)));
    emit_json(ctx, "build", payload);
    Ok(())
}

/// Every evaluator yields either a report with a value or a checked
/// inequality; the two shapes are emitted under different keys.
enum Evaluated {
    Report(BoundReport),
    Check(InequalityCheck),
}

fn run_bound(ctx: &RunContext, args: &BoundArgs) -> Result<(), CliError> {
    let name = args.name.as_str();
    let m_big = || -> Result<BigCount, CliError> {
        parse_bigcount(&require(args.m.clone(), "m", name)?)
    };
    let m_f64 = || -> Result<f64, CliError> {
        parse_f64(&require(args.m.clone(), "m", name)?, "copy budget")
    };
    let evaluated = match name {
        "csillag1" => Evaluated::Report(csillag1_lower_bound(
            require(args.n, "n", name)?,
            m_f64()?,
            require(args.s, "s", name)?,
            require(args.a, "a", name)?,
            require(args.b, "b", name)?,
        )?),
        "bollobas" => Evaluated::Report(bollobas_interpolated_bound(
            require(args.n, "n", name)?,
            require(args.k, "k", name)?,
            require(args.r, "r", name)?,
            &m_big()?,
        )?),
        "kruskal-katona" => Evaluated::Report(kruskal_katona_bound(
            m_f64()?,
            require(args.k, "k", name)?,
            require(args.r, "r", name)?,
        )?),
        "spanning" => {
            let span = parse_pattern(&require(args.span.clone(), "span", name)?)?;
            let tile = parse_pattern(&require(args.tile.clone(), "tile", name)?)?;
            Evaluated::Report(spanning_satex_estimate(
                require(args.n, "n", name)?,
                &span.to_graph(),
                &tile,
                &m_big()?,
            )?)
        }
        "blakley-roy" => {
            let host = load_graph(&require(args.host.clone(), "host", name)?)?;
            let n = host.n();
            let matrix: Vec<Vec<f64>> = (0..n)
                .map(|u| (0..n).map(|v| if host.has_edge(u, v) { 1.0 } else { 0.0 }).collect())
                .collect();
            let vector = match &args.vector {
                Some(raw) => parse_list::<f64>(raw, "vector")?,
                None => vec![1.0; n],
            };
            let q = require(args.q, "q", name)? as u32;
            Evaluated::Check(blakley_roy_check(&matrix, &vector, q)?)
        }
        "powermean" => {
            let degrees = parse_list::<u64>(&require(args.degrees.clone(), "degrees", name)?, "degrees")?;
            Evaluated::Check(lemma_powermean_check(
                &degrees,
                require(args.a, "a", name)?,
                require(args.s, "s", name)?,
            )?)
        }
        "pathpath" => Evaluated::Report(pathpath_main_term(
            require(args.n, "n", name)?,
            require(args.k, "k", name)?,
            require(args.q, "q", name)?,
            m_f64()?,
        )?),
        "pathcycle" => Evaluated::Report(pathcycle_lower_bound(
            require(args.n, "n", name)?,
            require(args.k, "k", name)?,
            m_f64()?,
        )?),
        "pathcycle-corollary" => Evaluated::Report(pathcycle_corollary_bound(
            require(args.n, "n", name)?,
            require(args.k, "k", name)?,
            require(args.q, "q", name)?,
            m_f64()?,
        )?),
        "fkr" => Evaluated::Report(fkr_disjoint_pairs_bound(
            require(args.n, "n", name)?,
            require(args.k, "k", name)?,
            require(args.set_count, "set-count", name)?,
        )?),
        "pk2t" => Evaluated::Report(pk2t_lower_bound(
            require(args.n, "n", name)?,
            require(args.k, "k", name)?,
            require(args.t, "t", name)?,
            m_f64()?,
        )?),
        "kqt" => Evaluated::Report(kqt_projection_bound(
            require(args.n, "n", name)?,
            require(args.q, "q", name)?,
            require(args.t, "t", name)?,
            require(args.s, "s", name)?,
            require(args.r, "r", name)?,
            &m_big()?,
        )?),
        "reiher-wagner" => Evaluated::Report(reiher_wagner_max_stars(
            require(args.n, "n", name)?,
            m_f64()?,
            require(args.k, "k", name)?,
        )?),
        "c2k" => Evaluated::Report(c2k_k2t_reference(
            require(args.n, "n", name)?,
            require(args.k, "k", name)?,
            require(args.t, "t", name)?,
        )?),
        other => {
            return Err(CliError::Parameter(format!(
                "unknown bound name {other:?}; known names: csillag1, bollobas, \
                 kruskal-katona, spanning, blakley-roy, powermean, pathpath, \
                 pathcycle, pathcycle-corollary, fkr, pk2t, kqt, reiher-wagner, c2k"
            )))
        }
    };
    let mut payload = Map::new();
    payload.insert("name".to_owned(), Value::from(args.name.clone()));
    match evaluated {
        Evaluated::Report(report) => {
            payload.insert("value".to_owned(), Value::from(report.value.to_string()));
            payload.insert("report".to_owned(), to_json(&report));
        }
        Evaluated::Check(check) => {
            payload.insert("check".to_owned(), to_json(&check));
        }
    }
    emit_json(ctx, "bound", payload);
    Ok(())
}

fn run_satex(ctx: &RunContext, args: &SatexArgs) -> Result<(), CliError> {
    let source = parse_pattern(&args.source)?;
    let target = parse_pattern(&args.target)?;
    let m = parse_bigcount(&args.m)?;
    let result = if args.heuristic {
        ctx.guard(args.n, LARGE_GUARD, "heuristic search", "pass --force to override")?;
        let mut options = LocalSearchOptions { seed: ctx.seed, ..LocalSearchOptions::default() };
        if let Some(budget) = args.budget {
            options.budget = budget;
        }
        if let Some(restarts) = args.restarts {
            options.restarts = restarts;
        }
        local_search_satex(args.n, &source, &m, &target, &options)?
    } else {
        ctx.guard(args.n, EXACT_GUARD, "exact search", "rerun with --heuristic")?;
        exact_satex(args.n, &source, &m, &target)?
    };
    let mut payload = Map::new();
    payload.insert("n".to_owned(), Value::from(args.n));
    payload.insert("source".to_owned(), Value::from(args.source.clone()));
    payload.insert("m".to_owned(), Value::from(args.m.clone()));
    payload.insert("target".to_owned(), Value::from(args.target.clone()));
    payload.insert("result".to_owned(), to_json(&result));
    emit_json(ctx, "satex", payload);
    Ok(())
}

fn run_turan(ctx: &RunContext, args: &TuranArgs) -> Result<(), CliError> {
    let pattern = parse_pattern(&args.pattern)?;
    let forbidden = parse_pattern(&args.forbidden)?;
    ctx.guard(args.n, EXACT_GUARD, "exact search", "no heuristic mode exists for this subcommand")?;
    let result = exact_generalized_turan(args.n, &pattern, &forbidden)?;
    let mut payload = Map::new();
    payload.insert("n".to_owned(), Value::from(args.n));
    payload.insert("pattern".to_owned(), Value::from(args.pattern.clone()));
    payload.insert("forbidden".to_owned(), Value::from(args.forbidden.clone()));
    payload.insert("result".to_owned(), to_json(&result));
    emit_json(ctx, "turan", payload);
    Ok(())
}

fn run_phase(ctx: &RunContext, args: &PhaseArgs) -> Result<(), CliError> {
    ctx.guard(args.n, LARGE_GUARD, "phase scanning", "pass --force to override")?;
    let grid: Vec<BigCount> = parse_list::<String>(&args.m_grid, "m-grid")?
        .iter()
        .map(|raw| parse_bigcount(raw))
        .collect::<Result<_, _>>()?;
    if grid.is_empty() {
        return Err(CliError::Parameter("the m-grid is empty".to_owned()));
    }
    let scan = phase_transition_scan(args.n, args.s, args.a, args.b, &grid)?;
    let stdout = std::io::stdout();
    let mut writer = csv::Writer::from_writer(stdout.lock());
    writer.write_record(["m", "quasi_clique_value", "quasi_star_value", "winner"])?;
    for point in &scan.points {
        writer.write_record([
            point.m.to_string(),
            point.quasi_clique_value.to_string(),
            point.quasi_star_value.to_string(),
            point.winner.label().to_owned(),
        ])?;
    }
    writer.flush().map_err(|err| CliError::Parameter(format!("CSV output failed: {err}")))?;
    eprintln!("note: {}", scan.note);
    if let Some(crossing) = scan.crossing {
        eprintln!("crossing: m/n^(a+b) ~ {crossing}");
    }
    if scan.exploratory {
        eprintln!("exploratory: parameters fall outside the conjectured regime b <= a < s");
    }
    Ok(())
}

fn run_berge(ctx: &RunContext, args: &BergeArgs) -> Result<(), CliError> {
    let pattern = parse_pattern(&args.pattern)?;
    if args.counts {
        let raw = require(args.hyper.clone(), "hyper", "--n1n2n3")?;
        let hypergraph = load_hypergraph(&raw)?;
        let counts = berge_counts(&hypergraph, &pattern)?;
        let mut payload = Map::new();
        payload.insert("hypergraph".to_owned(), to_json(&hypergraph));
        payload.insert("pattern".to_owned(), Value::from(args.pattern.clone()));
        payload.insert("counts".to_owned(), to_json(&counts));
        emit_json(ctx, "berge", payload);
        return Ok(());
    }
    let n = require(args.n, "n", "berge search")?;
    let r = require(args.r, "r", "berge search")?;
    let m = require(args.m, "m", "berge search")?;
    if args.minimise {
        let result = brute_satex_berge(n, r, m, &pattern, args.semantics)?;
        let mut payload = Map::new();
        payload.insert("n".to_owned(), Value::from(n));
        payload.insert("r".to_owned(), Value::from(r));
        payload.insert("m".to_owned(), Value::from(m));
        payload.insert("pattern".to_owned(), Value::from(args.pattern.clone()));
        payload.insert("semantics".to_owned(), Value::from(args.semantics));
        payload.insert("result".to_owned(), to_json(&result));
        emit_json(ctx, "berge", payload);
        return Ok(());
    }
    ctx.guard(n, EXACT_GUARD, "sandwich checking", "no heuristic mode exists for this subcommand")?;
    let report = berge_sandwich_check(n, r, m, &pattern)?;
    let mut payload = Map::new();
    payload.insert("pattern".to_owned(), Value::from(args.pattern.clone()));
    payload.insert("report".to_owned(), to_json(&report));
    emit_json(ctx, "berge", payload);
    Ok(())
}

// ============================================================
// Declarative sweep: bound-versus-exact batches
// ============================================================

/// One comparison job. The budget m is shared by the exact search
/// and the bound evaluator, so the two numbers answer the same
/// question and the `sound` column is meaningful.
#[derive(Deserialize)]
struct SweepJob {
    #[serde(default)]
    label: Option<String>,
    n: usize,
    source: String,
    m: String,
    target: String,
    /// Optional evaluator to compare: bollobas, kruskal-katona,
    /// csillag1 or kqt; parameters are inferred from the patterns.
    #[serde(default)]
    bound: Option<String>,
}

/// Evaluates the named bound on the job's satex instance, inferring
/// evaluator parameters from the source and target patterns.
fn sweep_bound(job: &SweepJob, m: &BigCount) -> Result<BoundReport, CliError> {
    let name = job.bound.as_deref().expect("caller checked the bound field");
    let source = parse_pattern(&job.source)?;
    let target = parse_pattern(&job.target)?;
    let n = job.n as u64;
    let mismatch = |expected: &str| {
        CliError::Parameter(format!(
            "bound {name:?} expects {expected}, got source {} and target {}",
            job.source, job.target
        ))
    };
    let report = match name {
        "bollobas" => match (&source, &target) {
            (PatternSpec::Clique(k), PatternSpec::Clique(r)) => {
                bollobas_interpolated_bound(n, *k as u64, *r as u64, m)?
            }
            _ => return Err(mismatch("clique source and clique target")),
        },
        "kruskal-katona" => match (&source, &target) {
            (PatternSpec::Clique(k), PatternSpec::Clique(r)) => {
                let m_f64 = m.to_f64().ok_or_else(|| {
                    CliError::Parameter(format!("budget {m} does not fit a float"))
                })?;
                kruskal_katona_bound(m_f64, *k as u64, *r as u64)?
            }
            _ => return Err(mismatch("clique source and clique target")),
        },
        "csillag1" => match (&source, &target) {
            (PatternSpec::Star(s), PatternSpec::CompleteBipartite(a, b)) => {
                let m_f64 = m.to_f64().ok_or_else(|| {
                    CliError::Parameter(format!("budget {m} does not fit a float"))
                })?;
                csillag1_lower_bound(n, m_f64, *s as u64, *a as u64, *b as u64)?
            }
            _ => return Err(mismatch("star source and biclique target")),
        },
        "kqt" => match (&source, &target) {
            (PatternSpec::CompleteBipartite(q, t), PatternSpec::CompleteBipartite(r, s)) => {
                kqt_projection_bound(n, *q as u64, *t as u64, *s as u64, *r as u64, m)?
            }
            _ => return Err(mismatch("biclique source and biclique target")),
        },
        other => {
            return Err(CliError::Parameter(format!(
                "unknown sweep bound {other:?}; known names: bollobas, kruskal-katona, csillag1, kqt"
            )))
        }
    };
    Ok(report)
}

/// A certified bound must sit at or below the exact optimum; the
/// rational route compares exactly and the float route allows the
/// pinned relative tolerance.
fn bound_is_sound(value: &BoundValue, exact: &BigCount) -> bool {
    match value {
        BoundValue::Rational(rational) => {
            *rational <= BigRational::from_integer(BigInt::from(exact.clone()))
        }
        BoundValue::Real(real) => {
            let exact_f64 = exact.to_f64().unwrap_or(f64::INFINITY);
            *real <= exact_f64 + RELATIVE_TOLERANCE * exact_f64.max(1.0)
        }
    }
}

fn run_sweep(ctx: &RunContext, args: &SweepArgs) -> Result<(), CliError> {
    let text = read_arg_text(&args.jobs)?;
    let jobs: Vec<SweepJob> = serde_json::from_str(&text)
        .map_err(|err| CliError::Parameter(format!("bad sweep job array: {err}")))?;
    if jobs.is_empty() {
        return Err(CliError::Parameter("the sweep job array is empty".to_owned()));
    }
    let stdout = std::io::stdout();
    let mut writer = csv::Writer::from_writer(stdout.lock());
    writer.write_record([
        "label", "n", "source", "m", "target", "exact", "bound", "bound_kind", "bound_value",
        "sound",
    ])?;
    let mut violations: Vec<String> = Vec::new();
    for (index, job) in jobs.iter().enumerate() {
        let label = job.label.clone().unwrap_or_else(|| format!("job-{index}"));
        let context = |err: CliError| match err {
            CliError::Parameter(detail) => CliError::Parameter(format!("{label}: {detail}")),
            CliError::Refusal(detail) => CliError::Refusal(format!("{label}: {detail}")),
            CliError::Alarm(detail) => CliError::Alarm(format!("{label}: {detail}")),
        };
        let source = parse_pattern(&job.source).map_err(&context)?;
        let target = parse_pattern(&job.target).map_err(&context)?;
        let m = parse_bigcount(&job.m).map_err(&context)?;
        ctx.guard(job.n, EXACT_GUARD, "exact search", "split the job or shrink n")
            .map_err(&context)?;
        let exact = exact_satex(job.n, &source, &m, &target)
            .map_err(CliError::from)
            .map_err(&context)?
            .optimum;
        let (bound_name, bound_kind, bound_value, sound) = match &job.bound {
            Some(name) => {
                let report = sweep_bound(job, &m).map_err(&context)?;
                let sound = match report.kind {
                    BoundKind::Certified => bound_is_sound(&report.value, &exact),
                    BoundKind::Asymptotic => true,
                };
                if !sound {
                    violations.push(format!(
                        "{label}: certified bound {name} = {} exceeds exact value {exact}",
                        report.value
                    ));
                }
                (
                    name.clone(),
                    report.kind.label().to_owned(),
                    report.value.to_string(),
                    sound.to_string(),
                )
            }
            None => (String::new(), String::new(), String::new(), String::new()),
        };
        writer.write_record([
            label,
            job.n.to_string(),
            job.source.clone(),
            job.m.clone(),
            job.target.clone(),
            exact.to_string(),
            bound_name,
            bound_kind,
            bound_value,
            sound,
        ])?;
    }
    writer.flush().map_err(|err| CliError::Parameter(format!("CSV output failed: {err}")))?;
    if !violations.is_empty() {
        return Err(CliError::Alarm(violations.join("; ")));
    }
    Ok(())
}

// ============================================================
// Entry point
// ============================================================

fn run(cli: &Cli) -> Result<(), CliError> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|err| CliError::Parameter(format!("cannot size the thread pool: {err}")))?;
    }
    let ctx = RunContext {
        seed: cli.seed,
        force: cli.force,
        max_n: cli.max_n,
        no_timestamp: cli.no_timestamp,
    };
    match &cli.command {
        Command::Count(args) => run_count(&ctx, args),
        Command::Build(args) => run_build(&ctx, args),
        Command::Bound(args) => run_bound(&ctx, args),
        Command::Satex(args) => run_satex(&ctx, args),
        Command::Turan(args) => run_turan(&ctx, args),
        Command::Phase(args) => run_phase(&ctx, args),
        Command::Berge(args) => run_berge(&ctx, args),
        Command::Sweep(args) => run_sweep(&ctx, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let mut stderr = std::io::stderr().lock();
            let _ = writeln!(stderr, "error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
