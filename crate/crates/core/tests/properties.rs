//! Randomized property tests over the core kernels.

use num::{ToPrimitive, Zero};
use proptest::prelude::*;
use satex_core::bounds::truncated_binomial;
use satex_core::combinatorics::binomial;
use satex_core::graph::Graph;
use satex_core::search::{canonical_code, exact_satex};
use satex_core::{count_subgraphs, BigCount, PatternSpec};

/// Arbitrary graph on up to `max_n` vertices from an edge bitmask.
fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits >> (k % 64) & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trips(g in arbitrary_graph(24)) {
        let encoded = satex_core::graph6::encode(&g);
        let decoded = satex_core::graph6::decode(&encoded).unwrap();
        prop_assert_eq!(&decoded, &g);
        prop_assert_eq!(satex_core::graph6::encode(&decoded), encoded);
    }

    #[test]
    fn truncated_binomial_is_monotone_and_matches_integers(
        x in 0.0f64..40.0,
        b in 0u64..6,
        step in 0.0f64..5.0,
    ) {
        let here = truncated_binomial(x, b);
        prop_assert!(here >= 0.0);
        prop_assert!(truncated_binomial(x + step, b) >= here);
        let floor = x.floor() as u64;
        let exact = binomial(floor, b).to_f64().unwrap();
        let at_integer = truncated_binomial(floor as f64, b);
        prop_assert!((at_integer - exact).abs() <= 1e-9 * exact.max(1.0));
    }

    #[test]
    fn relabeling_preserves_counts_and_canonical_code(
        g in arbitrary_graph(8),
        seed in any::<u64>(),
    ) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // Deterministic Fisher-Yates from the seed.
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let relabeled = g.relabel(&perm);
        prop_assert_eq!(canonical_code(&g), canonical_code(&relabeled));
        for pattern in [PatternSpec::Path(3), PatternSpec::Clique(3), PatternSpec::Cycle(4)] {
            prop_assert_eq!(
                count_subgraphs(&pattern, &g),
                count_subgraphs(&pattern, &relabeled)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn satex_is_monotone_in_the_budget(m in 0u64..15, bump in 1u64..4) {
        let source = PatternSpec::Clique(2);
        let target = PatternSpec::Clique(3);
        let lower = exact_satex(5, &source, &BigCount::from(m), &target);
        let higher = exact_satex(5, &source, &BigCount::from(m + bump), &target);
        match (lower, higher) {
            (Ok(a), Ok(b)) => prop_assert!(a.optimum <= b.optimum),
            (Ok(_), Err(_)) => {}
            (Err(_), Ok(_)) => prop_assert!(false, "feasibility is not downward closed"),
            (Err(_), Err(_)) => {}
        }
    }

    #[test]
    fn satex_witness_is_feasible_and_achieving(m in 0u64..20) {
        let source = PatternSpec::Path(3);
        let target = PatternSpec::Cycle(4);
        if let Ok(result) = exact_satex(5, &source, &BigCount::from(m), &target) {
            prop_assert!(count_subgraphs(&source, &result.witness) >= BigCount::from(m));
            prop_assert_eq!(count_subgraphs(&target, &result.witness), result.optimum);
            prop_assert!(result.exact);
        }
    }
}

#[test]
fn zero_budget_satex_is_always_zero() {
    for n in 0..=6usize {
        let result = exact_satex(
            n,
            &PatternSpec::Clique(3),
            &BigCount::zero(),
            &PatternSpec::Path(4),
        )
        .unwrap();
        assert!(result.optimum.is_zero());
        assert_eq!(result.witness.edge_count(), 0);
    }
}

#[test]
fn star_counts_equal_binomial_degree_sums() {
    // N(K_{1,s}, G) = sum over vertices of C(deg v, s): an identity
    // linking the counting kernel to plain degree arithmetic.
    let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (4, 5), (5, 6), (2, 6)])
        .unwrap();
    for s in 2..=4u64 {
        let direct = count_subgraphs(&PatternSpec::Star(s as usize), &g);
        let by_degrees: u64 = g
            .degrees()
            .iter()
            .map(|&d| binomial(d as u64, s).to_u64().unwrap())
            .sum();
        assert_eq!(direct, BigCount::from(by_degrees), "s = {s}");
    }
}
