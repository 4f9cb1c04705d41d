//! Canonical forms and isomorphism for small graphs.
//!
//! The canonical form of a graph is the relabeling that minimizes the
//! upper-triangle adjacency bits read in column-major order (the same bit
//! order graph6 uses), found by permutation backtracking with prefix
//! pruning. Exhaustive search is entirely adequate at n <= 10, which is all
//! the toolkit ever asks of it.

use crate::graph::Graph;

/// Column chunk for target position `k`: bit `(i, k)` of the relabeled
/// adjacency matrix at weight `2^(k-1-i)`, for placed targets `i < k`.
/// `adj_to_placed` has bit i set iff the candidate is adjacent to target i.
fn chunk(adj_to_placed: u32, k: usize) -> u32 {
    if k == 0 {
        0
    } else {
        adj_to_placed.reverse_bits() >> (32 - k)
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    /// perm[target] = original vertex
    perm: Vec<usize>,
    /// placed_adj[v] = bitmask over target positions already adjacent to v
    placed_adj: Vec<u32>,
    cols: Vec<u32>,
    best: Vec<u32>,
    best_perm: Vec<usize>,
}

impl<'a> CanonSearch<'a> {
    fn new(g: &'a Graph, seed: &[u32], seed_perm: &[usize]) -> Self {
        CanonSearch {
            g,
            n: g.n(),
            perm: vec![usize::MAX; g.n()],
            placed_adj: vec![0; g.n()],
            cols: vec![0; g.n()],
            best: seed.to_vec(),
            best_perm: seed_perm.to_vec(),
        }
    }

    /// Compares cols[0..=k] against best[0..=k]; the shared prefix comparison
    /// is re-run at every node so pruning stays valid when `best` improves.
    fn prefix_cmp(&self, k: usize) -> std::cmp::Ordering {
        self.cols[..=k].cmp(&self.best[..=k])
    }

    fn descend(&mut self, k: usize, used: u32) {
        if k == self.n {
            if self.cols < self.best {
                self.best.copy_from_slice(&self.cols);
                self.best_perm.copy_from_slice(&self.perm);
            }
            return;
        }
        // candidates ordered by chunk value so small keys are found early
        let mut cands: Vec<(u32, usize)> = (0..self.n)
            .filter(|&v| used & (1 << v) == 0)
            .map(|v| (chunk(self.placed_adj[v], k), v))
            .collect();
        cands.sort_unstable();
        for (c, v) in cands {
            self.cols[k] = c;
            if self.prefix_cmp(k) == std::cmp::Ordering::Greater {
                // all remaining candidates have even larger chunks
                break;
            }
            self.perm[k] = v;
            let nbrs = self.g.neighbors(v);
            for u in 0..self.n {
                if nbrs & (1 << u) != 0 {
                    self.placed_adj[u] |= 1 << k;
                }
            }
            self.descend(k + 1, used | (1 << v));
            for u in 0..self.n {
                if nbrs & (1 << u) != 0 {
                    self.placed_adj[u] &= !(1 << k);
                }
            }
        }
    }
}

fn identity_cols(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut cols = vec![0; n];
    for k in 0..n {
        let mut adj = 0u32;
        for i in 0..k {
            if g.has_edge(i, k) {
                adj |= 1 << i;
            }
        }
        cols[k] = chunk(adj, k);
    }
    cols
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return *g;
    }
    let idcols = identity_cols(g);
    let idperm: Vec<usize> = (0..n).collect();
    let mut search = CanonSearch::new(g, &idcols, &idperm);
    search.descend(0, 0);
    // best_perm[target] = original; relabel wants original -> target
    let mut perm = vec![0usize; n];
    for (target, &orig) in search.best_perm.iter().enumerate() {
        perm[orig] = target;
    }
    g.relabel(&perm)
}

/// Canonical key: the graph6 encoding of the canonical form. Keys are equal
/// exactly for isomorphic graphs, and their byte order is a total order on
/// isomorphism classes (vertex count first).
pub fn canonical_key(g: &Graph) -> Vec<u8> {
    crate::graph6::write_graph6(&canonical_form(g)).into_bytes()
}

/// True iff `g` equals its own canonical representative. Used by the
/// orderly enumeration, so this path is allocation-free and bails out as
/// soon as any smaller relabeling exists.
pub fn is_canonical(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    // cheap necessary condition: the minimal key starts with a non-edge
    // between the first two vertices whenever the graph has any non-edge
    let complete = g.edge_count() == n * (n - 1) / 2;
    if g.has_edge(0, 1) && !complete {
        return false;
    }
    let mut target = [0u32; 32];
    for k in 0..n {
        let mut adj = 0u32;
        for i in 0..k {
            if g.has_edge(i, k) {
                adj |= 1 << i;
            }
        }
        target[k] = chunk(adj, k);
    }
    // DFS over partial permutations; prune branches whose prefix exceeds the
    // identity key, accept defeat as soon as a strictly smaller prefix exists.
    struct S<'a> {
        g: &'a Graph,
        n: usize,
        target: [u32; 32],
        placed_adj: [u32; 32],
    }
    impl<'a> S<'a> {
        fn descend(&mut self, k: usize, used: u32) -> bool {
            if k == self.n {
                return true; // automorphism; keep looking elsewhere
            }
            let mut cands = [(0u32, 0u8); 32];
            let mut len = 0;
            for v in 0..self.n {
                if used & (1 << v) == 0 {
                    let c = chunk(self.placed_adj[v], k);
                    // insertion sort by chunk
                    let mut i = len;
                    while i > 0 && cands[i - 1].0 > c {
                        cands[i] = cands[i - 1];
                        i -= 1;
                    }
                    cands[i] = (c, v as u8);
                    len += 1;
                }
            }
            for &(c, v) in &cands[..len] {
                if c > self.target[k] {
                    break;
                }
                if c < self.target[k] {
                    return false; // strictly smaller key reachable
                }
                let v = v as usize;
                let nbrs = self.g.neighbors(v);
                let mut m = nbrs;
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    self.placed_adj[u] |= 1 << k;
                    m &= m - 1;
                }
                let ok = self.descend(k + 1, used | (1 << v));
                let mut m = nbrs;
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    self.placed_adj[u] &= !(1 << k);
                    m &= m - 1;
                }
                if !ok {
                    return false;
                }
            }
            true
        }
    }
    let mut s = S {
        g,
        n,
        target,
        placed_adj: [0; 32],
    };
    s.descend(0, 0)
}

/// Isomorphism test by direct permutation backtracking with degree pruning.
/// Independent of the canonical-form search; the two cross-validate each
/// other in the property tests.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() {
        return false;
    }
    if g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.n();
    if n == 0 {
        return true;
    }
    // map[v of g] = vertex of h
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: u32) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used & (1 << w) != 0 || g.degree(v) != h.degree(w) {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
            if ok {
                map.push(w);
                if extend(g, h, map, used | (1 << w)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, h, &mut Vec::with_capacity(n), 0)
}

/// The isomorphism itself (map from vertices of `g` to vertices of `h`),
/// when one exists. First match in lexicographic search order, so mapping a
/// graph to itself yields the identity.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: u32) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used & (1 << w) != 0 || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                if extend(g, h, map, used | (1 << w)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::with_capacity(g.n());
    extend(g, h, &mut map, 0).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::Graph;

    #[test]
    fn canonical_form_is_invariant_under_relabeling() {
        let g = catalog::petersen();
        let perm = [3, 1, 4, 0, 9, 2, 8, 5, 7, 6];
        let h = g.relabel(&perm);
        assert_eq!(canonical_key(&g), canonical_key(&h));
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn canonical_form_is_isomorphic_to_input() {
        let g = catalog::prism();
        let c = canonical_form(&g);
        assert!(is_isomorphic(&g, &c));
        assert!(is_canonical(&c));
    }

    #[test]
    fn named_isomorphisms() {
        assert!(is_isomorphic(&catalog::wheel(3), &catalog::complete(4)));
        assert!(!is_isomorphic(&catalog::prism(), &catalog::k33()));
        let k4_minus = catalog::complete(4).delete_edge(2, 3).unwrap();
        assert!(is_isomorphic(&catalog::multiedge(3), &k4_minus));
    }

    #[test]
    fn identity_map_on_equal_graphs() {
        let g = catalog::k33_minus();
        let map = find_isomorphism(&g, &g).unwrap();
        assert_eq!(map, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn keys_and_direct_isomorphism_agree_on_small_graphs() {
        // every pair of 4-vertex labeled graphs
        let mut graphs = Vec::new();
        for mask in 0u32..64 {
            let mut g = Graph::empty(4);
            let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    g.insert_edge(u, v);
                }
            }
            graphs.push(g);
        }
        for a in &graphs {
            for b in &graphs {
                assert_eq!(
                    is_isomorphic(a, b),
                    canonical_key(a) == canonical_key(b),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }
}
