//! Property tests for canonical forms, isomorphism, graph6, and the minor
//! operations.

use proptest::prelude::*;

use minorkit::canon::{canonical_form, canonical_key, is_isomorphic};
use minorkit::graph::Graph;
use minorkit::graph6::{parse_graph6, write_graph6};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << bits)).prop_map(|(n, mask)| {
            let mut g = Graph::empty(n);
            let mut b = 0;
            for v in 1..n {
                for u in 0..v {
                    if mask & (1 << b) != 0 {
                        g = g.add_edge(u, v).unwrap();
                    }
                    b += 1;
                }
            }
            g
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn canonical_key_is_relabeling_invariant(g in arb_graph(7), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        // cheap deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
    }

    #[test]
    fn canonical_form_stays_in_class(g in arb_graph(7)) {
        let c = canonical_form(&g);
        prop_assert!(is_isomorphic(&g, &c));
        prop_assert_eq!(canonical_form(&c), c);
    }

    #[test]
    fn graph6_round_trip_is_identity(g in arb_graph(7)) {
        let line = write_graph6(&g);
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn key_equality_matches_direct_isomorphism(a in arb_graph(5), b in arb_graph(5)) {
        prop_assert_eq!(canonical_key(&a) == canonical_key(&b), is_isomorphic(&a, &b));
    }

    #[test]
    fn contraction_invariants(g in arb_graph(7)) {
        for (u, v) in g.edges() {
            let c = g.contract_edge(u, v).unwrap();
            prop_assert_eq!(c.n(), g.n() - 1);
            // simple-graph contraction: no loops or parallels by construction,
            // so the edge count can only shrink
            prop_assert!(c.edge_count() <= g.edge_count() - 1);
        }
    }

    #[test]
    fn relabeling_preserves_isomorphism_class(g in arb_graph(6), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed ^ 0x9e3779b97f4a7c15;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert!(is_isomorphic(&g, &g.relabel(&perm)));
    }
}

#[test]
fn graph6_round_trips_every_enumerated_small_graph() {
    for n in 1..=6 {
        for g in minorkit::enumerate::enumerate_graphs(n, false).unwrap() {
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
}
