//! Extremal graph families and their closed-form copy counts.
//!
//! Constructions are validated against their contract properties
//! (vertex counts, degree profiles, forbidden-subgraph freeness), not
//! against any particular presentation; the bipartite incidence graphs
//! in particular have several equivalent descriptions in the
//! literature.

use std::fmt;

use num::{BigUint, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, binomial_f64, factorial, falling_factorial};
use crate::graph::Graph;
use crate::pattern::PatternSpec;
use crate::BigCount;

/// Named n-vertex construction; `n` is supplied separately to
/// [`build_family`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum FamilySpec {
    /// K_t plus n − t isolated vertices.
    QuasiClique { t: usize },
    /// Complement of the quasi-clique: an independent t-set joined
    /// completely to a clique on n − t vertices.
    QuasiStar { t: usize },
    /// Balanced complete q-partite Turán graph T(n, q).
    Turan { q: usize },
    /// Complete bipartite K_{a, n−a}.
    CompleteBipartite { a: usize },
    /// Füredi bipartite-incidence graph H(p, r) on p(p−1)/r vertices:
    /// K_{2,r+1}-free, with p − 1 vertices of degree p − 2 and the rest
    /// of degree p − 1. Requires p an odd prime and r | p − 1.
    Furedi { p: u64, r: u64 },
    /// Erdős–Rényi polarity graph on q² + q + 1 vertices, C_4-free,
    /// degrees q and q + 1. Requires q prime.
    Polarity { q: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    /// A size parameter does not fit the requested vertex count.
    SizeMismatch { detail: String },
    /// A number-theoretic precondition failed.
    BadParameter { detail: String },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::SizeMismatch { detail } | FamilyError::BadParameter { detail } => {
                write!(f, "{detail}")
            }
        }
    }
}

impl std::error::Error for FamilyError {}

fn size_mismatch(detail: String) -> FamilyError {
    FamilyError::SizeMismatch { detail }
}

fn bad_parameter(detail: String) -> FamilyError {
    FamilyError::BadParameter { detail }
}

/// Builds the named family on exactly `n` vertices.
pub fn build_family(spec: &FamilySpec, n: usize) -> Result<Graph, FamilyError> {
    match *spec {
        FamilySpec::QuasiClique { t } => {
            if t > n {
                return Err(size_mismatch(format!("quasi-clique needs t ≤ n, got t={t}, n={n}")));
            }
            let mut g = Graph::empty(n);
            for u in 0..t {
                for v in u + 1..t {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        FamilySpec::QuasiStar { t } => {
            Ok(build_family(&FamilySpec::QuasiClique { t }, n)?.complement())
        }
        FamilySpec::Turan { q } => {
            if q == 0 || q > n.max(1) {
                return Err(bad_parameter(format!("Turán graph needs 1 ≤ q ≤ n, got q={q}, n={n}")));
            }
            let mut g = Graph::empty(n);
            // Vertex v belongs to part v mod q: parts differ by at most one.
            for u in 0..n {
                for v in u + 1..n {
                    if u % q != v % q {
                        g.add_edge(u, v);
                    }
                }
            }
            Ok(g)
        }
        FamilySpec::CompleteBipartite { a } => {
            if a > n {
                return Err(size_mismatch(format!("bipartite side a={a} exceeds n={n}")));
            }
            let mut g = Graph::empty(n);
            for u in 0..a {
                for v in a..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        FamilySpec::Furedi { p, r } => {
            let g = build_furedi(p, r)?;
            if g.n() != n {
                return Err(size_mismatch(format!(
                    "Füredi graph H({p},{r}) has {} vertices, not {n}",
                    g.n()
                )));
            }
            Ok(g)
        }
        FamilySpec::Polarity { q } => {
            let g = build_polarity(q)?;
            if g.n() != n {
                return Err(size_mismatch(format!(
                    "polarity graph for q={q} has {} vertices, not {n}",
                    g.n()
                )));
            }
            Ok(g)
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// H(p, r): vertices are the orbits of {(a, b) ∈ Z_p × Z_p : b ≠ 0}
/// under coordinatewise multiplication by the order-r subgroup h of
/// Z_p^*, with orbits ⟨(a, b)⟩ and ⟨(x, y)⟩ adjacent when
/// a·y + b·x ∈ h; the relation is invariant under scaling either
/// representative, and loops (orbits with 2ab ∈ h) are discarded.
fn build_furedi(p: u64, r: u64) -> Result<Graph, FamilyError> {
    if !is_prime(p) || p == 2 {
        return Err(bad_parameter(format!("Füredi construction needs an odd prime, got p={p}")));
    }
    if r == 0 || (p - 1) % r != 0 {
        return Err(bad_parameter(format!("Füredi construction needs r | p−1, got p={p}, r={r}")));
    }
    // Order-r subgroup of Z_p^*: powers of g^((p−1)/r) for a primitive
    // root g.
    let g = (2..p).find(|&c| mult_order(c, p) == p - 1).expect("prime has a primitive root");
    let step = pow_mod(g, (p - 1) / r, p);
    let mut subgroup = vec![false; p as usize];
    let mut x = 1u64;
    for _ in 0..r {
        subgroup[x as usize] = true;
        x = x * step % p;
    }
    // Orbit representatives: the lexicographically least pair in each orbit.
    let mut rep_index = vec![usize::MAX; (p * p) as usize];
    let mut reps: Vec<(u64, u64)> = Vec::new();
    for a in 0..p {
        for b in 1..p {
            if rep_index[(a * p + b) as usize] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            let mut t = 1u64;
            for _ in 0..r {
                rep_index[(t * a % p * p + t * b % p) as usize] = idx;
                t = t * step % p;
            }
            reps.push((a, b));
        }
    }
    debug_assert_eq!(reps.len() as u64, p * (p - 1) / r);
    let mut graph = Graph::empty(reps.len());
    for i in 0..reps.len() {
        let (a, b) = reps[i];
        for (j, &(x, y)) in reps.iter().enumerate().take(i) {
            if subgroup[((a * y + b * x) % p) as usize] {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(graph)
}

fn mult_order(c: u64, p: u64) -> u64 {
    let mut x = c % p;
    let mut k = 1;
    while x != 1 {
        x = x * c % p;
        k += 1;
    }
    k
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Erdős–Rényi polarity graph: vertices are the points of the
/// projective plane PG(2, q), two distinct points adjacent when their
/// dot product vanishes; self-polar points keep their vertex but lose
/// the loop.
fn build_polarity(q: u64) -> Result<Graph, FamilyError> {
    if !is_prime(q) {
        return Err(bad_parameter(format!("polarity construction needs q prime, got q={q}")));
    }
    // Projective points normalised so the first nonzero coordinate is 1.
    let mut points: Vec<[u64; 3]> = Vec::new();
    points.push([0, 0, 1]);
    for z in 0..q {
        points.push([0, 1, z]);
    }
    for y in 0..q {
        for z in 0..q {
            points.push([1, y, z]);
        }
    }
    debug_assert_eq!(points.len() as u64, q * q + q + 1);
    let mut graph = Graph::empty(points.len());
    for i in 0..points.len() {
        for j in 0..i {
            let dot: u64 = points[i].iter().zip(&points[j]).map(|(a, b)| a * b).sum();
            if dot % q == 0 {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(graph)
}

// ============================================================
// Closed-form copy counts on structured hosts
// ============================================================

/// Number of k-cliques in the Turán graph T(n, q): the elementary
/// symmetric polynomial e_k of the part sizes.
pub fn turan_clique_count(q: u64, n: u64, k: u64) -> BigCount {
    assert!(q >= 1, "Turán graph needs at least one part");
    let big = n % q; // parts of size small+1
    let small_size = n / q;
    // Polynomial ∏ over parts (1 + size·x); coefficient of x^k.
    let mut coeffs: Vec<BigUint> = vec![BigUint::one()];
    let mut push_part = |size: u64, copies: u64| {
        for _ in 0..copies {
            let mut next = vec![BigUint::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c * size;
            }
            coeffs = next;
        }
    };
    push_part(small_size + 1, big);
    push_part(small_size, q - big);
    coeffs.into_iter().nth(k as usize).unwrap_or_else(BigUint::zero)
}

/// N(P_k, K_n): falling factorial halved for k ≥ 2.
pub fn paths_in_complete(n: u64, k: u64) -> BigCount {
    match k {
        0 => BigCount::one(),
        1 => BigCount::from(n),
        _ => falling_factorial(n, k) / 2u32,
    }
}

/// N(P_k, K_{a,b}): paths alternate sides.
pub fn paths_in_complete_bipartite(a: u64, b: u64, k: u64) -> BigCount {
    match k {
        0 => BigCount::one(),
        1 => BigCount::from(a + b),
        _ => {
            let long = k.div_ceil(2);
            let short = k / 2;
            if k % 2 == 0 {
                // Both directed orientations start on opposite sides.
                falling_factorial(a, long) * falling_factorial(b, short)
            } else {
                (falling_factorial(a, long) * falling_factorial(b, short)
                    + falling_factorial(b, long) * falling_factorial(a, short))
                    / 2u32
            }
        }
    }
}

/// N(C_len, K_{a,b}): zero for odd lengths, else
/// (a)_k (b)_k / (2k) with k = len/2.
pub fn cycles_in_complete_bipartite(a: u64, b: u64, len: u64) -> BigCount {
    assert!(len >= 3, "cycle length below 3");
    if len % 2 == 1 {
        return BigCount::zero();
    }
    let k = len / 2;
    binomial(a, k) * binomial(b, k) * factorial(k) * factorial(k - 1) / 2u32
}

/// N(K_{s,t}, K_{a,b}): sides must land in opposite parts.
pub fn bicliques_in_complete_bipartite(a: u64, b: u64, s: u64, t: u64) -> BigCount {
    assert!(s >= 1 && t >= 1, "biclique sides must be nonempty");
    if s == t {
        binomial(a, s) * binomial(b, s)
    } else {
        binomial(a, s) * binomial(b, t) + binomial(a, t) * binomial(b, s)
    }
}

// ============================================================
// Asymptotic main terms for path and star counts
// ============================================================

/// Host shape for [`closed_form_main_term`], parameterised by the
/// density λ ∈ (0, 1): a quasi-clique K_{λn}, the quasi-star whose
/// clique side has λn vertices, or the bipartite K_{λn,(1−λ)n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MainTermFamily {
    QuasiClique,
    QuasiStar,
    Bipartite,
}

/// Which asymptotic row to evaluate: the full main term, its small-λ
/// simplification, or its λ → 1 simplification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MainTermRegime {
    Full,
    SmallLambda,
    NearOne,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MainTermQuery {
    pub family: MainTermFamily,
    pub pattern: PatternSpec,
    pub lambda: f64,
    pub n: f64,
    pub regime: MainTermRegime,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MainTermError {
    /// Only Path(k) and Star(k) patterns have tabulated main terms.
    UnsupportedPattern { pattern: String },
    /// The requested row does not exist (for example the bipartite
    /// λ → 1 limit, or any specialisation of a star count).
    NotTabulated { detail: String },
    BadLambda { lambda: f64 },
}

impl fmt::Display for MainTermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MainTermError::UnsupportedPattern { pattern } => {
                write!(f, "no tabulated main term for pattern {pattern}")
            }
            MainTermError::NotTabulated { detail } => write!(f, "{detail}"),
            MainTermError::BadLambda { lambda } => {
                write!(f, "λ must lie strictly between 0 and 1, got {lambda}")
            }
        }
    }
}

impl std::error::Error for MainTermError {}

/// Leading-order copy count of the query's pattern in the query's
/// family, including the n^k (paths) or n^{k+1}/k! (stars) scale.
pub fn closed_form_main_term(query: &MainTermQuery) -> Result<f64, MainTermError> {
    let lambda = query.lambda;
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(MainTermError::BadLambda { lambda });
    }
    let n = query.n;
    match query.pattern {
        PatternSpec::Path(k) if k >= 2 => {
            let k = k as u64;
            let nk = n.powi(k as i32);
            let value = match (query.family, query.regime) {
                (MainTermFamily::QuasiClique, _) => 0.5 * (lambda * n).powi(k as i32),
                (MainTermFamily::QuasiStar, MainTermRegime::Full) => {
                    let mut sum = 0.0;
                    for t in 0..=k.div_ceil(2) {
                        sum += lambda.powi((k - t) as i32)
                            * (1.0 - lambda).powi(t as i32)
                            * binomial_f64((k - t + 1) as f64, t);
                    }
                    0.5 * sum * nk
                }
                (MainTermFamily::QuasiStar, MainTermRegime::SmallLambda) => {
                    if k % 2 == 0 {
                        0.5 * (k as f64 / 2.0 + 1.0) * lambda.powi((k / 2) as i32) * nk
                    } else {
                        0.5 * lambda.powi(((k - 1) / 2) as i32) * nk
                    }
                }
                (MainTermFamily::QuasiStar, MainTermRegime::NearOne) => {
                    0.5 * (lambda * n).powi(k as i32)
                }
                (MainTermFamily::Bipartite, MainTermRegime::Full) => {
                    let product = lambda * (1.0 - lambda);
                    if k % 2 == 0 {
                        product.powi((k / 2) as i32) * nk
                    } else {
                        0.5 * product.powi(((k - 1) / 2) as i32) * nk
                    }
                }
                (MainTermFamily::Bipartite, MainTermRegime::SmallLambda) => {
                    if k % 2 == 0 {
                        lambda.powi((k / 2) as i32) * nk
                    } else {
                        0.5 * lambda.powi(((k - 1) / 2) as i32) * nk
                    }
                }
                (MainTermFamily::Bipartite, MainTermRegime::NearOne) => {
                    return Err(MainTermError::NotTabulated {
                        detail: "the bipartite family has no λ → 1 main term row".to_owned(),
                    })
                }
            };
            Ok(value)
        }
        PatternSpec::Star(k) if k >= 1 => {
            if query.regime != MainTermRegime::Full {
                return Err(MainTermError::NotTabulated {
                    detail: "star main terms are only tabulated in full form".to_owned(),
                });
            }
            let k = k as u64;
            let scale = n.powi(k as i32 + 1) / factorial(k).to_f64().expect("small factorial");
            let coefficient = match query.family {
                MainTermFamily::QuasiClique => lambda.powi(k as i32 + 1),
                MainTermFamily::QuasiStar => lambda + (1.0 - lambda) * lambda.powi(k as i32),
                MainTermFamily::Bipartite => {
                    lambda * (1.0 - lambda).powi(k as i32) + (1.0 - lambda) * lambda.powi(k as i32)
                }
            };
            Ok(coefficient * scale)
        }
        ref other => Err(MainTermError::UnsupportedPattern { pattern: other.to_string() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count_subgraphs;

    fn count(p: &PatternSpec, g: &Graph) -> u64 {
        count_subgraphs(p, g).to_u64().unwrap()
    }

    #[test]
    fn quasi_clique_and_star_shapes() {
        let qc = build_family(&FamilySpec::QuasiClique { t: 3 }, 5).unwrap();
        assert_eq!(qc.edge_count(), 3);
        assert_eq!(qc.degrees(), vec![2, 2, 2, 0, 0]);
        let qs = build_family(&FamilySpec::QuasiStar { t: 3 }, 5).unwrap();
        assert_eq!(qs, qc.complement());
        assert!(build_family(&FamilySpec::QuasiClique { t: 6 }, 5).is_err());
    }

    #[test]
    fn turan_graph_and_clique_counts() {
        let t = build_family(&FamilySpec::Turan { q: 3 }, 6).unwrap();
        assert_eq!(t.edge_count(), 12);
        assert_eq!(count(&PatternSpec::Clique(3), &t), 8);
        assert_eq!(turan_clique_count(2, 6, 2).to_u64(), Some(9));
        assert_eq!(turan_clique_count(3, 6, 3).to_u64(), Some(8));
        assert_eq!(turan_clique_count(2, 6, 3).to_u64(), Some(0));
    }

    #[test]
    fn turan_clique_count_matches_exhaustive_counting() {
        for n in 1..=8u64 {
            for q in 1..=n {
                let g = build_family(&FamilySpec::Turan { q: q as usize }, n as usize).unwrap();
                for k in 1..=n {
                    assert_eq!(
                        turan_clique_count(q, n, k),
                        count_subgraphs(&PatternSpec::Clique(k as usize), &g),
                        "t({q},{n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn furedi_graph_contract() {
        let g = build_family(&FamilySpec::Furedi { p: 5, r: 2 }, 10).unwrap();
        assert_eq!(g.n(), 10);
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        assert_eq!(&degrees[..4], &[3, 3, 3, 3]);
        assert_eq!(&degrees[4..], &[4, 4, 4, 4, 4, 4]);
        assert_eq!(count(&PatternSpec::CompleteBipartite(2, 3), &g), 0);

        assert!(build_family(&FamilySpec::Furedi { p: 5, r: 2 }, 11).is_err());
        assert!(build_family(&FamilySpec::Furedi { p: 6, r: 1 }, 30).is_err());
        assert!(build_family(&FamilySpec::Furedi { p: 7, r: 4 }, 10).is_err());
    }

    #[test]
    fn polarity_graph_contract() {
        let g = build_family(&FamilySpec::Polarity { q: 2 }, 7).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(count(&PatternSpec::Cycle(4), &g), 0);
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        assert!(degrees.iter().all(|&d| d == 2 || d == 3), "degrees {degrees:?}");
        assert!(build_family(&FamilySpec::Polarity { q: 4 }, 21).is_err());
    }

    #[test]
    fn closed_form_counts_match_kernels_on_small_hosts() {
        for n in 2..=7u64 {
            let host = Graph::complete(n as usize);
            for k in 2..=n.min(5) {
                assert_eq!(
                    paths_in_complete(n, k),
                    count_subgraphs(&PatternSpec::Path(k as usize), &host)
                );
            }
        }
        for a in 1..=4u64 {
            for b in 1..=4u64 {
                let host = build_family(&FamilySpec::CompleteBipartite { a: a as usize }, (a + b) as usize).unwrap();
                for k in 2..=(a + b).min(5) {
                    assert_eq!(
                        paths_in_complete_bipartite(a, b, k),
                        count_subgraphs(&PatternSpec::Path(k as usize), &host),
                        "P_{k} in K_{{{a},{b}}}"
                    );
                }
                for len in [4u64, 5, 6] {
                    if len <= a + b {
                        assert_eq!(
                            cycles_in_complete_bipartite(a, b, len),
                            count_subgraphs(&PatternSpec::Cycle(len as usize), &host),
                            "C_{len} in K_{{{a},{b}}}"
                        );
                    }
                }
                for (s, t) in [(1u64, 1u64), (1, 2), (2, 2), (2, 3)] {
                    assert_eq!(
                        bicliques_in_complete_bipartite(a, b, s, t),
                        count_subgraphs(&PatternSpec::CompleteBipartite(s as usize, t as usize), &host),
                        "K_{{{s},{t}}} in K_{{{a},{b}}}"
                    );
                }
            }
        }
    }

    #[test]
    fn main_term_anchor_values() {
        let clique = MainTermQuery {
            family: MainTermFamily::QuasiClique,
            pattern: PatternSpec::Path(3),
            lambda: 0.5,
            n: 16.0,
            regime: MainTermRegime::Full,
        };
        assert!((closed_form_main_term(&clique).unwrap() - 256.0).abs() < 1e-9);

        // Quasi-star k = 2 collapses to (2λ − λ²)n²/2.
        for lambda in [0.2, 0.5, 0.8] {
            let q = MainTermQuery {
                family: MainTermFamily::QuasiStar,
                pattern: PatternSpec::Path(2),
                lambda,
                n: 10.0,
                regime: MainTermRegime::Full,
            };
            let expected = 0.5 * (2.0 * lambda - lambda * lambda) * 100.0;
            assert!((closed_form_main_term(&q).unwrap() - expected).abs() < 1e-9);
        }

        let bip = MainTermQuery {
            family: MainTermFamily::Bipartite,
            pattern: PatternSpec::Path(4),
            lambda: 0.5,
            n: 16.0,
            regime: MainTermRegime::Full,
        };
        assert!((closed_form_main_term(&bip).unwrap() - 16.0f64.powi(4) / 16.0).abs() < 1e-9);
    }

    #[test]
    fn main_term_ratio_improves_along_a_ladder() {
        // Quasi-clique P_3 main term vs the exact count at λ = 1/2.
        let mut previous = f64::INFINITY;
        for n in [16u64, 32, 64] {
            let g = build_family(&FamilySpec::QuasiClique { t: (n / 2) as usize }, n as usize).unwrap();
            let exact = count_subgraphs(&PatternSpec::Path(3), &g).to_f64().unwrap();
            let query = MainTermQuery {
                family: MainTermFamily::QuasiClique,
                pattern: PatternSpec::Path(3),
                lambda: 0.5,
                n: n as f64,
                regime: MainTermRegime::Full,
            };
            let main = closed_form_main_term(&query).unwrap();
            let ratio = main / exact;
            assert!(ratio > 1.0 && ratio < previous, "ratio {ratio} at n={n}");
            previous = ratio;
        }
    }

    #[test]
    fn main_term_star_rows_match_direct_counts_asymptotically() {
        for (family, spec) in [
            (MainTermFamily::QuasiClique, FamilySpec::QuasiClique { t: 30 }),
            (MainTermFamily::QuasiStar, FamilySpec::QuasiStar { t: 30 }),
            (MainTermFamily::Bipartite, FamilySpec::CompleteBipartite { a: 30 }),
        ] {
            let g = build_family(&spec, 60).unwrap();
            let exact = count_subgraphs(&PatternSpec::Star(2), &g).to_f64().unwrap();
            let query = MainTermQuery {
                family,
                pattern: PatternSpec::Star(2),
                lambda: 0.5,
                n: 60.0,
                regime: MainTermRegime::Full,
            };
            let main = closed_form_main_term(&query).unwrap();
            assert!((main / exact - 1.0).abs() < 0.15, "{family:?}: main {main} vs exact {exact}");
        }
    }

    #[test]
    fn main_term_rejects_untabulated_rows() {
        let bad = MainTermQuery {
            family: MainTermFamily::Bipartite,
            pattern: PatternSpec::Path(3),
            lambda: 0.9,
            n: 10.0,
            regime: MainTermRegime::NearOne,
        };
        assert!(matches!(closed_form_main_term(&bad), Err(MainTermError::NotTabulated { .. })));
        let cycle = MainTermQuery {
            family: MainTermFamily::QuasiClique,
            pattern: PatternSpec::Cycle(4),
            lambda: 0.5,
            n: 10.0,
            regime: MainTermRegime::Full,
        };
        assert!(matches!(closed_form_main_term(&cycle), Err(MainTermError::UnsupportedPattern { .. })));
        let star_small = MainTermQuery {
            family: MainTermFamily::QuasiClique,
            pattern: PatternSpec::Star(2),
            lambda: 0.1,
            n: 10.0,
            regime: MainTermRegime::SmallLambda,
        };
        assert!(matches!(closed_form_main_term(&star_small), Err(MainTermError::NotTabulated { .. })));
    }

    #[test]
    fn family_spec_json_round_trip() {
        let spec = FamilySpec::Furedi { p: 5, r: 2 };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"family":"furedi","params":{"p":5,"r":2}}"#);
        assert_eq!(serde_json::from_str::<FamilySpec>(&text).unwrap(), spec);
        let turan: FamilySpec = serde_json::from_str(r#"{"family":"turan","params":{"q":3}}"#).unwrap();
        assert_eq!(turan, FamilySpec::Turan { q: 3 });
    }
}
