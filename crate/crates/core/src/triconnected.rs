//! Decomposition of 2-connected graphs into triconnected components:
//! polygons, bonds, and proper 3-connected multigraph nodes with paired
//! virtual edges.
//!
//! The splitter is the recursive one: find a separation pair (or a parallel
//! class), split with a paired virtual edge on each side, recurse, then
//! merge adjacent same-kind nodes. The glue-back round trip is the
//! correctness anchor and is asserted in debug builds.

use std::collections::BTreeMap;

use crate::connectivity::is_2_connected;
use crate::error::DecomposeError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// A cycle C_m, m >= 3.
    Polygon,
    /// A multiedge of multiplicity >= 3 on two vertices.
    Bond,
    /// Simple, 3-connected, >= 4 vertices.
    ProperThreeConnected,
}

/// One edge of a decomposition node, in original vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentEdge {
    pub u: usize,
    pub v: usize,
    pub is_virtual: bool,
}

/// A node of the triconnected decomposition. Vertices keep their original
/// ids; `vertices` lists them ascending.
#[derive(Debug, Clone)]
pub struct MultiGraphComponent {
    pub vertices: Vec<usize>,
    pub edges: Vec<ComponentEdge>,
    pub kind: ComponentKind,
}

impl MultiGraphComponent {
    /// The underlying simple graph on local indices plus the local->original
    /// vertex map (parallel edges collapse).
    pub fn simple_graph(&self) -> (Graph, Vec<usize>) {
        let map = self.vertices.clone();
        let mut g = Graph::empty(map.len());
        for e in &self.edges {
            let lu = map.binary_search(&e.u).unwrap();
            let lv = map.binary_search(&e.v).unwrap();
            if !g.has_edge(lu, lv) {
                g.insert_edge(lu, lv);
            }
        }
        (g, map)
    }

    pub fn virtual_edge_indices(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].is_virtual).collect()
    }

    pub fn edge_multiplicity(&self) -> usize {
        self.edges.len()
    }
}

/// Reference to an edge: (component index, edge index).
pub type EdgeRef = (usize, usize);

/// The full decomposition: components plus the virtual-edge pairing, an
/// involution gluing the tree back into the original graph.
#[derive(Debug, Clone)]
pub struct ComponentTree {
    pub components: Vec<MultiGraphComponent>,
    pub pairing: Vec<(EdgeRef, EdgeRef)>,
    original: Graph,
}

impl ComponentTree {
    pub fn original(&self) -> &Graph {
        &self.original
    }

    /// The partner of a virtual edge.
    pub fn partner(&self, e: EdgeRef) -> Option<EdgeRef> {
        for &(a, b) in &self.pairing {
            if a == e {
                return Some(b);
            }
            if b == e {
                return Some(a);
            }
        }
        None
    }

    /// Reassembles the original graph: identify endpoints across every
    /// virtual pair and drop the virtual edges. Returns the resulting
    /// simple graph on the original vertex ids.
    pub fn glue_all(&self) -> Graph {
        let mut g = Graph::empty(self.original.n());
        for comp in &self.components {
            for e in &comp.edges {
                if !e.is_virtual && !g.has_edge(e.u, e.v) {
                    g.insert_edge(e.u, e.v);
                }
            }
        }
        g
    }

    /// Indented text report, virtual edges marked `v`.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.components.iter().enumerate() {
            let kind = match c.kind {
                ComponentKind::Polygon => "polygon",
                ComponentKind::Bond => "bond",
                ComponentKind::ProperThreeConnected => "proper-3-connected",
            };
            out.push_str(&format!("component {i}: {kind}, vertices {:?}\n", c.vertices));
            for e in &c.edges {
                let mark = if e.is_virtual { " v" } else { "" };
                out.push_str(&format!("  ({}, {}){mark}\n", e.u, e.v));
            }
        }
        out
    }
}

/// Working multigraph edge during splitting; virtual edges carry the pair id
/// shared with their partner.
#[derive(Debug, Clone, Copy)]
struct WEdge {
    u: usize,
    v: usize,
    pair: Option<u32>,
}

impl WEdge {
    fn ends(&self) -> (usize, usize) {
        if self.u < self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// Decomposes a 2-connected graph (>= 3 vertices) into its triconnected
/// components.
pub fn decompose_3connected(g: &Graph) -> Result<ComponentTree, DecomposeError> {
    if g.n() < 3 {
        return Err(DecomposeError::TooSmall);
    }
    if !is_2_connected(g) {
        return Err(DecomposeError::NotTwoConnected);
    }
    let edges: Vec<WEdge> = g
        .edges()
        .map(|(u, v)| WEdge { u, v, pair: None })
        .collect();
    let mut next_pair = 0u32;
    let mut leaves: Vec<Vec<WEdge>> = Vec::new();
    split(edges, &mut next_pair, &mut leaves);
    merge_same_kind(&mut leaves);

    let mut components = Vec::new();
    let mut pair_locations: BTreeMap<u32, Vec<EdgeRef>> = BTreeMap::new();
    for (ci, leaf) in leaves.iter().enumerate() {
        let mut vset: Vec<usize> = leaf.iter().flat_map(|e| [e.u, e.v]).collect();
        vset.sort_unstable();
        vset.dedup();
        let mut comp_edges = Vec::new();
        for (ei, e) in leaf.iter().enumerate() {
            comp_edges.push(ComponentEdge {
                u: e.u.min(e.v),
                v: e.u.max(e.v),
                is_virtual: e.pair.is_some(),
            });
            if let Some(p) = e.pair {
                pair_locations.entry(p).or_default().push((ci, ei));
            }
        }
        let kind = classify_leaf(&vset, leaf);
        components.push(MultiGraphComponent {
            vertices: vset,
            edges: comp_edges,
            kind,
        });
    }
    let mut pairing = Vec::new();
    for (p, locs) in pair_locations {
        assert_eq!(locs.len(), 2, "virtual pair {p} must appear exactly twice");
        pairing.push((locs[0], locs[1]));
    }
    let tree = ComponentTree {
        components,
        pairing,
        original: *g,
    };
    debug_assert_eq!(tree.glue_all(), *g, "glue-back must reproduce the input");
    debug_assert!(no_same_kind_adjacency(&tree));
    Ok(tree)
}

fn classify_leaf(vset: &[usize], edges: &[WEdge]) -> ComponentKind {
    if vset.len() == 2 {
        assert!(edges.len() >= 3, "bond of multiplicity {} produced", edges.len());
        return ComponentKind::Bond;
    }
    let simple = leaf_simple(vset, edges);
    let is_cycle = simple.edge_count() == edges.len()
        && vset.len() == edges.len()
        && (0..simple.n()).all(|v| simple.degree(v) == 2);
    if is_cycle {
        ComponentKind::Polygon
    } else {
        assert_eq!(
            simple.edge_count(),
            edges.len(),
            "proper node must be simple"
        );
        assert!(
            crate::connectivity::is_3_connected(&simple),
            "leaf is neither polygon, bond, nor 3-connected"
        );
        ComponentKind::ProperThreeConnected
    }
}

fn leaf_simple(vset: &[usize], edges: &[WEdge]) -> Graph {
    let mut g = Graph::empty(vset.len());
    for e in edges {
        let lu = vset.binary_search(&e.u).unwrap();
        let lv = vset.binary_search(&e.v).unwrap();
        if !g.has_edge(lu, lv) {
            g.insert_edge(lu, lv);
        }
    }
    g
}

fn vertices_of(edges: &[WEdge]) -> Vec<usize> {
    let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

fn split(edges: Vec<WEdge>, next_pair: &mut u32, leaves: &mut Vec<Vec<WEdge>>) {
    let vset = vertices_of(&edges);
    // 2-vertex node: a bond leaf
    if vset.len() == 2 {
        leaves.push(edges);
        return;
    }
    // parallel class with the whole graph bigger than it: split the bond off
    let mut by_ends: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        by_ends.entry(e.ends()).or_default().push(i);
    }
    if let Some((&(a, b), idxs)) = by_ends.iter().find(|(_, idxs)| idxs.len() >= 2) {
        let p = *next_pair;
        *next_pair += 1;
        let mut bond: Vec<WEdge> = idxs.iter().map(|&i| edges[i]).collect();
        bond.push(WEdge { u: a, v: b, pair: Some(p) });
        leaves.push(bond);
        let mut rest: Vec<WEdge> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !idxs.contains(i))
            .map(|(_, e)| *e)
            .collect();
        rest.push(WEdge { u: a, v: b, pair: Some(p) });
        split(rest, next_pair, leaves);
        return;
    }
    // simple multigraph here: cycle and 3-connected leaves
    let simple = {
        let mut g = Graph::empty(vset.len());
        for e in &edges {
            let lu = vset.binary_search(&e.u).unwrap();
            let lv = vset.binary_search(&e.v).unwrap();
            g.insert_edge(lu, lv);
        }
        g
    };
    let is_cycle = (0..simple.n()).all(|v| simple.degree(v) == 2);
    if is_cycle || crate::connectivity::is_3_connected(&simple) {
        leaves.push(edges);
        return;
    }
    // separation pair split: side1 = edges meeting the first separated
    // component, side2 = the rest; both get the paired virtual edge
    let (a, b, comp_mask) = separation_pair(&simple)
        .expect("2-connected, not a cycle, not 3-connected: separation pair exists");
    let (ga, gb) = (vset[a], vset[b]);
    let in_comp = |v: usize| {
        let lv = vset.binary_search(&v).unwrap();
        comp_mask & (1 << lv) != 0
    };
    let p = *next_pair;
    *next_pair += 1;
    let mut side1: Vec<WEdge> = Vec::new();
    let mut side2: Vec<WEdge> = Vec::new();
    for e in &edges {
        if in_comp(e.u) || in_comp(e.v) {
            side1.push(*e);
        } else {
            side2.push(*e);
        }
    }
    side1.push(WEdge { u: ga, v: gb, pair: Some(p) });
    side2.push(WEdge { u: ga, v: gb, pair: Some(p) });
    split(side1, next_pair, leaves);
    split(side2, next_pair, leaves);
}

/// A pair of local vertices whose removal disconnects the rest, plus the
/// mask of one separated component (local indices).
fn separation_pair(g: &Graph) -> Option<(usize, usize, u32)> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            let allowed = g.vertex_mask() & !(1 << a) & !(1 << b);
            if allowed == 0 {
                continue;
            }
            let first = allowed.trailing_zeros() as usize;
            let comp = crate::connectivity::reach(g, first, allowed);
            if comp != allowed {
                return Some((a, b, comp));
            }
        }
    }
    None
}

/// Merges adjacent polygon/polygon and bond/bond pairs until none remain.
/// With parallel-first splitting these rarely (if ever) arise, but the merge
/// keeps the output canonical regardless of split order.
fn merge_same_kind(leaves: &mut Vec<Vec<WEdge>>) {
    loop {
        let kinds: Vec<ComponentKind> = leaves
            .iter()
            .map(|l| classify_leaf(&vertices_of(l), l))
            .collect();
        let mut merge_at: Option<(usize, usize, u32)> = None;
        'outer: for i in 0..leaves.len() {
            for j in i + 1..leaves.len() {
                if kinds[i] != kinds[j] || kinds[i] == ComponentKind::ProperThreeConnected {
                    continue;
                }
                for ei in &leaves[i] {
                    if let Some(p) = ei.pair {
                        if leaves[j].iter().any(|ej| ej.pair == Some(p)) {
                            merge_at = Some((i, j, p));
                            break 'outer;
                        }
                    }
                }
            }
        }
        let Some((i, j, p)) = merge_at else {
            return;
        };
        let lj = leaves.swap_remove(j);
        let li = std::mem::take(&mut leaves[i]);
        let merged: Vec<WEdge> = li
            .into_iter()
            .chain(lj)
            .filter(|e| e.pair != Some(p))
            .collect();
        leaves[i] = merged;
    }
}

fn no_same_kind_adjacency(tree: &ComponentTree) -> bool {
    tree.pairing.iter().all(|&((ci, _), (cj, _))| {
        let (ki, kj) = (tree.components[ci].kind, tree.components[cj].kind);
        !(ki == kj && ki != ComponentKind::ProperThreeConnected)
    })
}
