//! Connectivity predicates and block (2-connected component) decomposition.
//!
//! k-connectivity is decided by brute force over small vertex cuts, which
//! is exactly right at 32 vertices and keeps the predicates trustworthy.

use crate::graph::Graph;

/// Vertices reachable from `start` while staying inside `allowed`.
pub(crate) fn reach(g: &Graph, start: usize, allowed: u32) -> u32 {
    debug_assert!(allowed & (1 << start) != 0);
    let mut reached = 1u32 << start;
    loop {
        let mut next = reached;
        let mut m = reached;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            next |= g.neighbors(v) & allowed;
            m &= m - 1;
        }
        if next == reached {
            return reached;
        }
        reached = next;
    }
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    reach(g, 0, g.vertex_mask()) == g.vertex_mask()
}

/// Vertex sets of the connected components, ascending by smallest member.
pub fn connected_components(g: &Graph) -> Vec<u32> {
    let mut remaining = g.vertex_mask();
    let mut comps = Vec::new();
    while remaining != 0 {
        let v = remaining.trailing_zeros() as usize;
        let comp = reach(g, v, remaining);
        comps.push(comp);
        remaining &= !comp;
    }
    comps
}

fn component_count_within(g: &Graph, allowed: u32) -> usize {
    let mut remaining = allowed;
    let mut count = 0;
    while remaining != 0 {
        let v = remaining.trailing_zeros() as usize;
        let comp = reach(g, v, remaining);
        count += 1;
        remaining &= !comp;
    }
    count
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let base = connected_components(g).len();
    g.vertices()
        .filter(|&v| {
            let allowed = g.vertex_mask() & !(1 << v);
            allowed != 0 && component_count_within(g, allowed) > base
        })
        .collect()
}

/// Connected, at least 3 vertices, and no cut vertex.
pub fn is_2_connected(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && cut_vertices(g).is_empty()
}

/// Connected, at least 4 vertices, and no cut set of size at most 2.
pub fn is_3_connected(g: &Graph) -> bool {
    if g.n() < 4 || !is_connected(g) {
        return false;
    }
    for a in g.vertices() {
        for b in a..g.n() {
            let allowed = g.vertex_mask() & !(1 << a) & !(1 << b);
            if component_count_within(g, allowed) > 1 {
                return false;
            }
        }
    }
    true
}

/// Simple, 3-connected, and at least 4 vertices (excludes polygons and
/// bonds of the triconnected decomposition).
pub fn is_properly_3_connected(g: &Graph) -> bool {
    is_3_connected(g)
}

/// A maximal 2-connected subgraph (or a single bridge edge) of a graph.
#[derive(Debug, Clone)]
pub struct Block {
    /// Local-index -> original vertex id.
    pub vertices: Vec<usize>,
    /// The block as a graph on local indices.
    pub graph: Graph,
}

/// Splits `g` into blocks: every edge lands in exactly one block; bridge
/// edges appear as 2-vertex blocks. Isolated vertices yield no block.
pub fn blocks(g: &Graph) -> Vec<Block> {
    // Hopcroft-Tarjan lowpoint DFS with an edge stack.
    struct Dfs<'a> {
        g: &'a Graph,
        num: Vec<usize>,
        low: Vec<usize>,
        clock: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    impl<'a> Dfs<'a> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.clock += 1;
            self.num[v] = self.clock;
            self.low[v] = self.clock;
            for w in self.g.neighbors_iter(v) {
                if Some(w) == parent {
                    continue;
                }
                if self.num[w] == 0 {
                    self.stack.push((v, w));
                    self.visit(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.num[v] {
                        // v separates w's subtree: pop one block
                        let mut edges = Vec::new();
                        while let Some(&(a, b)) = self.stack.last() {
                            if self.num[a] >= self.num[w] {
                                edges.push((a, b));
                                self.stack.pop();
                            } else {
                                break;
                            }
                        }
                        debug_assert_eq!(self.stack.last(), Some(&(v, w)));
                        self.stack.pop();
                        edges.push((v, w));
                        self.blocks.push(edges);
                    }
                } else if self.num[w] < self.num[v] {
                    self.stack.push((v, w));
                    self.low[v] = self.low[v].min(self.num[w]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        num: vec![0; g.n()],
        low: vec![0; g.n()],
        clock: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in g.vertices() {
        if dfs.num[v] == 0 {
            dfs.visit(v, None);
            debug_assert!(dfs.stack.is_empty());
        }
    }
    dfs.blocks
        .into_iter()
        .map(|edges| {
            let mut mask = 0u32;
            for &(a, b) in &edges {
                mask |= (1 << a) | (1 << b);
            }
            let vertices: Vec<usize> = (0..g.n()).filter(|&v| mask & (1 << v) != 0).collect();
            let mut local = Graph::empty(vertices.len());
            for &(a, b) in &edges {
                let la = vertices.binary_search(&a).unwrap();
                let lb = vertices.binary_search(&b).unwrap();
                local.insert_edge(la, lb);
            }
            Block {
                vertices,
                graph: local,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn path_is_not_2_connected() {
        let p3 = catalog::path(3);
        assert!(!is_2_connected(&p3));
        assert_eq!(cut_vertices(&p3), vec![1]);
    }

    #[test]
    fn wheel4_is_3_connected() {
        assert!(is_3_connected(&catalog::wheel(4)));
        assert!(!is_3_connected(&catalog::cycle(5)));
        assert!(is_properly_3_connected(&catalog::wheel(3)));
        assert!(is_properly_3_connected(&catalog::prism()));
        assert!(!is_properly_3_connected(&catalog::cycle(5)));
    }

    #[test]
    fn shared_vertex_of_two_triangles_is_cut() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(cut_vertices(&g), vec![2]);
        let bs = blocks(&g);
        assert_eq!(bs.len(), 2);
        for b in &bs {
            assert_eq!(b.graph.n(), 3);
            assert_eq!(b.graph.edge_count(), 3);
        }
    }

    #[test]
    fn blocks_partition_edges() {
        // two triangles joined by a bridge edge plus a pendant
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (0, 7)],
        );
        let bs = blocks(&g);
        let total: usize = bs.iter().map(|b| b.graph.edge_count()).sum();
        assert_eq!(total, g.edge_count());
        assert_eq!(bs.iter().filter(|b| b.graph.n() == 2).count(), 3);
    }

    #[test]
    fn component_masks() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]);
        let comps = connected_components(&g);
        assert_eq!(comps, vec![0b00011, 0b01100, 0b10000]);
        assert!(!is_connected(&g));
        assert!(is_connected(&Graph::empty(0)));
    }
}
