//! Minor containment: decide `pattern ≺ host`, produce verifiable branch-set
//! certificates, and the minimal-minor / forbidden-set utilities built on it.
//!
//! The search extends branch sets one host vertex at a time, always working
//! on the unsatisfied pattern edge with the fewest growth options. This is
//! exponential in the worst case; it is comfortable for hosts up to a dozen
//! vertices, which covers every exhaustive run in this toolkit.

use std::sync::atomic::{AtomicUsize, Ordering};

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::canon::{canonical_key, find_isomorphism};
use crate::graph::Graph;
use crate::set::GraphSet;

/// A minor embedding: disjoint connected branch sets in the host, one per
/// pattern vertex, with a host edge behind every pattern edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pattern: Graph,
    host: Graph,
    /// branch_sets[p] = host-vertex bitmask for pattern vertex p
    branch_sets: Vec<u32>,
}

impl MinorModel {
    pub fn new(pattern: Graph, host: Graph, branch_sets: Vec<u32>) -> MinorModel {
        MinorModel {
            pattern,
            host,
            branch_sets,
        }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn branch_set(&self, p: usize) -> Vec<usize> {
        (0..self.host.n())
            .filter(|&v| self.branch_sets[p] & (1 << v) != 0)
            .collect()
    }

    pub fn branch_masks(&self) -> &[u32] {
        &self.branch_sets
    }

    /// Independent certificate check: set count and non-emptiness,
    /// disjointness, connectivity of every branch set, and coverage of every
    /// pattern edge. Shares no code with the search.
    pub fn verify(&self) -> bool {
        if self.branch_sets.len() != self.pattern.n() {
            return false;
        }
        let host_mask = self.host.vertex_mask();
        let mut seen = 0u32;
        for &bs in &self.branch_sets {
            if bs == 0 || bs & !host_mask != 0 || bs & seen != 0 {
                return false;
            }
            seen |= bs;
            // connectivity by BFS inside the set
            let start = bs.trailing_zeros() as usize;
            if crate::connectivity::reach(&self.host, start, bs) != bs {
                return false;
            }
        }
        for (pu, pv) in self.pattern.edges() {
            let bu = self.branch_sets[pu];
            let bv = self.branch_sets[pv];
            let mut touched = false;
            let mut m = bu;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                if self.host.neighbors(v) & bv != 0 {
                    touched = true;
                    break;
                }
                m &= m - 1;
            }
            if !touched {
                return false;
            }
        }
        true
    }

    /// One line per branch set: `pattern-vertex: {host vertices}`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in 0..self.pattern.n() {
            let verts: Vec<String> = self.branch_set(p).iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("{p}: {{{}}}\n", verts.join(", ")));
        }
        out
    }
}

/// Free-function alias for the certificate check.
pub fn verify_minor_model(m: &MinorModel) -> bool {
    m.verify()
}

static MEMO_CAPACITY: AtomicUsize = AtomicUsize::new(1 << 20);
static MEMO: Lazy<DashMap<(Vec<u8>, Vec<u8>), bool>> = Lazy::new(DashMap::new);

/// Caps the has_minor memo cache (0 disables it). The whole cache resets
/// when the cap is exceeded.
pub fn set_memo_capacity(cap: usize) {
    MEMO_CAPACITY.store(cap, Ordering::Relaxed);
    if cap == 0 {
        MEMO.clear();
    }
}

pub fn clear_memo() {
    MEMO.clear();
}

/// True iff `pattern` is a minor of `host`. Memoized on canonical keys, so
/// exhaustive sweeps that revisit isomorphic hosts pay the search once.
pub fn has_minor(host: &Graph, pattern: &Graph) -> bool {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    if pattern.n() == 0 {
        return true;
    }
    let cap = MEMO_CAPACITY.load(Ordering::Relaxed);
    if cap == 0 {
        return search(host, pattern).is_some();
    }
    let key = (canonical_key(host), canonical_key(pattern));
    if let Some(hit) = MEMO.get(&key) {
        return *hit;
    }
    let result = search(host, pattern).is_some();
    if MEMO.len() >= cap {
        MEMO.clear();
    }
    MEMO.insert(key, result);
    result
}

/// A verified model when `pattern ≺ host`, `None` otherwise.
pub fn find_minor_model(host: &Graph, pattern: &Graph) -> Option<MinorModel> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if pattern.n() == 0 {
        return Some(MinorModel::new(*pattern, *host, Vec::new()));
    }
    // identity-style fast path: isomorphic graphs map by singletons
    if pattern.n() == host.n() && pattern.edge_count() == host.edge_count() {
        if let Some(map) = find_isomorphism(pattern, host) {
            let sets = map.iter().map(|&w| 1u32 << w).collect();
            let model = MinorModel::new(*pattern, *host, sets);
            debug_assert!(model.verify());
            return Some(model);
        }
    }
    let sets = search(host, pattern)?;
    let model = MinorModel::new(*pattern, *host, sets);
    debug_assert!(model.verify());
    Some(model)
}

/// Branch-set extension search. Returns the branch masks of a model.
fn search(host: &Graph, pattern: &Graph) -> Option<Vec<u32>> {
    let pn = pattern.n();
    // pattern vertices in decreasing degree order get roots first
    let mut order: Vec<usize> = (0..pn).collect();
    order.sort_by_key(|&p| std::cmp::Reverse(pattern.degree(p)));
    let mut state = Search {
        host,
        pattern,
        sets: vec![0u32; pn],
        used: 0,
        order,
    };
    state.place_roots(0).then(|| state.sets)
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    sets: Vec<u32>,
    used: u32,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn place_roots(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return self.grow();
        }
        let p = self.order[idx];
        let needs_edges = self.pattern.degree(p) > 0;
        for v in self.host.vertices() {
            if self.used & (1 << v) != 0 {
                continue;
            }
            if needs_edges && self.host.degree(v) == 0 {
                continue;
            }
            self.sets[p] = 1 << v;
            self.used |= 1 << v;
            if self.place_roots(idx + 1) {
                return true;
            }
            self.sets[p] = 0;
            self.used &= !(1 << v);
        }
        false
    }

    fn host_boundary(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            out |= self.host.neighbors(v);
            m &= m - 1;
        }
        out
    }

    fn grow(&mut self) -> bool {
        // fail-first: the unsatisfied pattern edge with fewest growth options
        let mut best: Option<(usize, usize, u32, u32)> = None; // (pu, pv, opts_u, opts_v)
        for (pu, pv) in self.pattern.edges() {
            let bu = self.sets[pu];
            let bv = self.sets[pv];
            if self.host_boundary(bu) & bv != 0 {
                continue; // satisfied
            }
            let ou = self.host_boundary(bu) & !self.used;
            let ov = self.host_boundary(bv) & !self.used;
            let count = ou.count_ones() + ov.count_ones();
            if count == 0 {
                return false; // dead end
            }
            match &best {
                Some((_, _, a, b)) if a.count_ones() + b.count_ones() <= count => {}
                _ => best = Some((pu, pv, ou, ov)),
            }
        }
        let Some((pu, pv, ou, ov)) = best else {
            return true; // all pattern edges satisfied
        };
        for (p, opts) in [(pu, ou), (pv, ov)] {
            let mut m = opts;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                self.sets[p] |= 1 << w;
                self.used |= 1 << w;
                if self.grow() {
                    return true;
                }
                self.sets[p] &= !(1 << w);
                self.used &= !(1 << w);
            }
        }
        false
    }
}

/// The minimal members of `b` under the minor order: members with no other
/// member as a proper minor.
pub fn minimal_minors(b: &GraphSet) -> GraphSet {
    let members: Vec<&Graph> = b.iter().collect();
    let mut out = GraphSet::new();
    for (i, g) in members.iter().enumerate() {
        let dominated = members
            .iter()
            .enumerate()
            .any(|(j, h)| i != j && has_minor(g, h));
        if !dominated {
            out.insert(**g);
        }
    }
    out
}

/// True iff no member of `b` is a minor of `g`: the membership test for the
/// minor-closed class generated by forbidding `b`.
pub fn excludes_all(g: &Graph, b: &GraphSet) -> bool {
    b.iter().all(|h| !has_minor(g, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::canon::is_isomorphic;

    #[test]
    fn size_rules_out() {
        assert!(!has_minor(&catalog::complete(4), &catalog::complete(5)));
    }

    #[test]
    fn c5_contracts_to_triangle() {
        assert!(has_minor(&catalog::cycle(5), &catalog::complete(3)));
    }

    #[test]
    fn petersen_has_k5_minor() {
        let model = find_minor_model(&catalog::petersen(), &catalog::complete(5)).unwrap();
        assert!(model.verify());
        assert!(has_minor(&catalog::petersen(), &catalog::complete(5)));
    }

    #[test]
    fn multiedge4_inside_reduced_k5() {
        // removing two edges at a degree-4 vertex of K5 minus an edge leaves
        // exactly the 4-multiedge
        let g = catalog::k5_minus(); // missing (3,4); degree-4 vertices 0,1,2
        let g = g.delete_edge(0, 3).unwrap().delete_edge(0, 4).unwrap();
        assert!(is_isomorphic(&g, &catalog::multiedge(4)));
        assert!(has_minor(&catalog::k5_minus(), &catalog::multiedge(4)));
    }

    #[test]
    fn identity_model_is_singletons() {
        let g = catalog::k33_minus();
        let m = find_minor_model(&g, &g).unwrap();
        assert!(m.verify());
        for p in 0..g.n() {
            assert_eq!(m.branch_set(p), vec![p]);
        }
    }

    #[test]
    fn wheel5_has_k4_minor_with_valid_model() {
        let m = find_minor_model(&catalog::wheel(5), &catalog::complete(4)).unwrap();
        assert!(verify_minor_model(&m));
    }

    #[test]
    fn tampered_models_fail_verification() {
        let g = catalog::complete(4);
        let ok = MinorModel::new(catalog::complete(3), g, vec![0b0001, 0b0010, 0b0100]);
        assert!(ok.verify());
        let overlapping = MinorModel::new(catalog::complete(3), g, vec![0b0011, 0b0010, 0b0100]);
        assert!(!overlapping.verify());
        let empty = MinorModel::new(catalog::complete(3), g, vec![0b0001, 0, 0b0100]);
        assert!(!empty.verify());
        let disconnected = MinorModel::new(
            catalog::complete(3),
            catalog::cycle(5),
            vec![0b00101, 0b00010, 0b11000],
        );
        assert!(!disconnected.verify());
    }

    #[test]
    fn minimal_minor_examples() {
        let mut b = GraphSet::new();
        b.insert(catalog::complete(5));
        b.insert(catalog::k5_minus());
        let min = minimal_minors(&b);
        assert_eq!(min.len(), 1);
        assert!(min.contains_iso(&catalog::k5_minus()));

        let mut b = GraphSet::new();
        b.insert(catalog::complete(5));
        b.insert(catalog::k33());
        let min = minimal_minors(&b);
        assert_eq!(min.len(), 2);

        assert_eq!(minimal_minors(&GraphSet::new()).len(), 0);
    }

    #[test]
    fn excludes_all_examples() {
        let mut reduced = GraphSet::new();
        reduced.insert(catalog::k5_minus());
        reduced.insert(catalog::k33_minus());
        assert!(excludes_all(&catalog::prism(), &reduced));

        let mut kuratowski = GraphSet::new();
        kuratowski.insert(catalog::complete(5));
        kuratowski.insert(catalog::k33());
        assert!(!excludes_all(&catalog::complete(5), &kuratowski));
    }

    #[test]
    fn isolated_pattern_vertices_match_spares() {
        let pattern = Graph::from_edges(3, &[(0, 1)]); // edge plus isolated vertex
        assert!(has_minor(&catalog::path(3), &pattern));
        assert!(!has_minor(&catalog::complete(2), &pattern));
    }
}
