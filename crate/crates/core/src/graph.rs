//! Simple undirected graphs on at most 32 contiguously numbered vertices.
//!
//! Adjacency rows are single machine words, so the whole toolkit runs on
//! word-parallel set operations. Graphs are immutable values: every
//! operation returns a fresh graph.

use std::fmt;

use crate::error::GraphError;

/// Hard vertex limit: one adjacency row per `u32`.
pub const MAX_VERTICES: usize = 32;

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices. Panics if `n > 32`.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph too large: {n} vertices");
        Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        }
    }

    pub fn try_new(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph::empty(n))
    }

    /// Builds a graph from an edge list. Panics on invalid edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Bitmask of all vertices.
    pub fn vertex_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & (1 << v) != 0
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn neighbors_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.n()).filter(move |&u| mask & (1 << u) != 0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n()]
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            (u + 1..n).filter_map(move |v| self.has_edge(u, v).then_some((u, v)))
        })
    }

    /// Non-edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            (u + 1..n).filter_map(move |v| (!self.has_edge(u, v)).then_some((u, v)))
        })
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n() && v < self.n() && u != v, "bad edge ({u},{v})");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n() })
        }
    }

    /// Adds the edge `(u, v)`. The edge must be absent and proper.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgePresent(u, v));
        }
        let mut g = *self;
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Deletes the edge `(u, v)`. The edge must be present.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        let mut g = *self;
        g.remove_edge(u, v);
        Ok(g)
    }

    /// Deletes vertex `v` with its incident edges; higher vertices shift down.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = Graph::empty(self.n() - 1);
        for (a, b) in self.edges() {
            if a == v || b == v {
                continue;
            }
            let a2 = if a > v { a - 1 } else { a };
            let b2 = if b > v { b - 1 } else { b };
            g.insert_edge(a2, b2);
        }
        Ok(g)
    }

    /// Replaces edge `(u, v)` by a path `u - w - v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        if self.n() == MAX_VERTICES {
            return Err(GraphError::TooManyVertices(MAX_VERTICES + 1));
        }
        let w = self.n();
        let mut g = Graph::empty(self.n() + 1);
        g.adj[..self.n()].copy_from_slice(&self.adj[..self.n()]);
        g.remove_edge(u, v);
        g.insert_edge(u, w);
        g.insert_edge(w, v);
        Ok(g)
    }

    /// Contracts edge `(u, v)`: the endpoints merge, parallel edges merge,
    /// the loop is dropped, and vertices renumber contiguously.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut merged = *self;
        let joint = (merged.adj[keep] | merged.adj[gone]) & !(1 << keep) & !(1 << gone);
        merged.adj[keep] = joint;
        for w in 0..self.n() {
            if joint & (1 << w) != 0 {
                merged.adj[w] |= 1 << keep;
            }
            merged.adj[w] &= !(1 << gone);
        }
        merged.adj[gone] = 0;
        merged.delete_isolated_slot(gone)
    }

    /// Removes the (now edgeless) slot `gone`, shifting higher vertices down.
    fn delete_isolated_slot(&self, gone: usize) -> Result<Graph, GraphError> {
        debug_assert_eq!(self.adj[gone], 0);
        let mut g = Graph::empty(self.n() - 1);
        for (a, b) in self.edges() {
            let a2 = if a > gone { a - 1 } else { a };
            let b2 = if b > gone { b - 1 } else { b };
            g.insert_edge(a2, b2);
        }
        Ok(g)
    }

    /// Applies the permutation `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Induced subgraph on the vertices of `mask`, renumbered in ascending
    /// order. Returns the subgraph and the map local index -> original vertex.
    pub fn induced(&self, mask: u32) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = self.vertices().filter(|&v| mask & (1 << v) != 0).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        (g, verts)
    }

    /// Disjoint union, vertices of `other` renumbered after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let base = self.n();
        let mut g = Graph::empty(base + other.n());
        g.adj[..base].copy_from_slice(&self.adj[..base]);
        for (u, v) in other.edges() {
            g.insert_edge(base + u, base + v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::canon::is_isomorphic;

    #[test]
    fn delete_vertex_renumbers() {
        let k5 = catalog::complete(5);
        let g = k5.delete_vertex(2).unwrap();
        assert!(is_isomorphic(&g, &catalog::complete(4)));
        let c4 = catalog::cycle(4);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(is_isomorphic(&c4.delete_vertex(0).unwrap(), &p3));
    }

    #[test]
    fn wheel_hub_delete_gives_rim() {
        let w4 = catalog::wheel(4);
        // hub is the last vertex by construction
        let rim = w4.delete_vertex(4).unwrap();
        assert!(is_isomorphic(&rim, &catalog::cycle(4)));
    }

    #[test]
    fn contract_merges_parallels() {
        let c4 = catalog::cycle(4);
        let g = c4.contract_edge(0, 1).unwrap();
        assert!(is_isomorphic(&g, &catalog::cycle(3)));
        let k4 = catalog::complete(4);
        let g = k4.contract_edge(1, 2).unwrap();
        assert!(is_isomorphic(&g, &catalog::complete(3)));
    }

    #[test]
    fn subdivide_then_contract_restores() {
        let k4 = catalog::complete(4);
        let g = k4.subdivide_edge(0, 1).unwrap();
        assert_eq!(g.n(), 5);
        assert!(!g.has_edge(0, 1));
        let back = g.contract_edge(0, 4).unwrap();
        assert!(is_isomorphic(&back, &k4));
    }

    #[test]
    fn add_edge_chord() {
        let c4 = catalog::cycle(4);
        let g = c4.add_edge(0, 2).unwrap();
        let k4_minus = catalog::complete(4).delete_edge(1, 3).unwrap();
        assert!(is_isomorphic(&g, &k4_minus));
    }

    #[test]
    fn op_errors() {
        let c4 = catalog::cycle(4);
        assert!(matches!(c4.delete_vertex(4), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(c4.add_edge(0, 1), Err(GraphError::EdgePresent(..))));
        assert!(matches!(c4.add_edge(1, 1), Err(GraphError::SelfLoop(_))));
        assert!(matches!(c4.delete_edge(0, 2), Err(GraphError::EdgeAbsent(..))));
        assert!(matches!(c4.contract_edge(0, 2), Err(GraphError::EdgeAbsent(..))));
    }
}
