//! Cross-validation of the branch-set minor search against an independent
//! oracle: breadth-first closure of single minor operations (vertex
//! deletion, edge deletion, edge contraction) over isomorphism classes.

use std::collections::{HashSet, VecDeque};

use minorkit::canon::canonical_key;
use minorkit::enumerate::enumerate_graphs_upto;
use minorkit::graph::Graph;
use minorkit::minor::{find_minor_model, has_minor};

/// Canonical keys of every minor of `h`, by exhaustive closure of the three
/// single operations. Shares nothing with the branch-set search.
fn all_minor_keys(h: &Graph) -> HashSet<Vec<u8>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let start = minorkit::canon::canonical_form(h);
    seen.insert(canonical_key(&start));
    queue.push_back(start);
    while let Some(g) = queue.pop_front() {
        let mut push = |m: Graph| {
            let key = canonical_key(&m);
            if seen.insert(key) {
                queue.push_back(minorkit::canon::canonical_form(&m));
            }
        };
        for v in g.vertices() {
            push(g.delete_vertex(v).unwrap());
        }
        for (u, v) in g.edges() {
            push(g.delete_edge(u, v).unwrap());
            push(g.contract_edge(u, v).unwrap());
        }
    }
    seen
}

#[test]
fn search_agrees_with_operation_closure_oracle() {
    let hosts = enumerate_graphs_upto(6, false).unwrap();
    let patterns = enumerate_graphs_upto(5, false).unwrap();
    for host in &hosts {
        let minors = all_minor_keys(host);
        for pattern in &patterns {
            let expected = minors.contains(&canonical_key(pattern));
            assert_eq!(
                has_minor(host, pattern),
                expected,
                "host {host:?} pattern {pattern:?}"
            );
        }
    }
}

#[test]
fn found_models_always_verify() {
    let hosts = enumerate_graphs_upto(6, false).unwrap();
    let patterns = enumerate_graphs_upto(4, false).unwrap();
    for host in &hosts {
        for pattern in &patterns {
            if let Some(model) = find_minor_model(host, pattern) {
                assert!(model.verify(), "host {host:?} pattern {pattern:?}");
                assert!(has_minor(host, pattern));
            } else {
                assert!(!has_minor(host, pattern));
            }
        }
    }
}

#[test]
fn minor_relation_is_monotone_under_host_growth() {
    // if p ≺ h and h ≺ h' by one operation, then p ≺ h'
    let hosts = enumerate_graphs_upto(5, true).unwrap();
    let patterns = enumerate_graphs_upto(4, true).unwrap();
    for h in &hosts {
        for p in &patterns {
            if !has_minor(h, p) {
                continue;
            }
            for v in h.vertices() {
                if h.n() < 8 {
                    // h is a minor of h + pendant vertex at v
                    let mut bigger = h.disjoint_union(&Graph::empty(1));
                    bigger = bigger.add_edge(v, h.n()).unwrap();
                    assert!(has_minor(&bigger, p));
                }
            }
            for (u, v) in h.non_edges() {
                assert!(has_minor(&h.add_edge(u, v).unwrap(), p));
            }
        }
    }
}

#[test]
fn minimal_minors_is_idempotent_and_an_antichain() {
    use minorkit::minor::minimal_minors;
    use minorkit::GraphSet;
    let graphs = enumerate_graphs_upto(5, false).unwrap();
    // a few deterministic slices as input sets
    for chunk in graphs.chunks(17) {
        let b: GraphSet = chunk.iter().copied().collect();
        let min = minimal_minors(&b);
        let again = minimal_minors(&min);
        assert!(min.same_classes(&again));
        let members: Vec<&Graph> = min.iter().collect();
        for (i, g) in members.iter().enumerate() {
            for (j, h) in members.iter().enumerate() {
                if i != j {
                    assert!(!has_minor(g, h), "antichain violated: {h:?} ≺ {g:?}");
                }
            }
        }
    }
}
