//! Exhaustive enumeration of non-isomorphic graphs on up to 8 vertices.
//!
//! Orderly generation: labeled graphs are scanned in ascending edge-mask
//! order (bit b of the mask = upper-triangle pair b in graph6 column-major
//! position) and a graph is kept only when it equals its own canonical
//! representative. Deterministic output, no external generator.

use rayon::prelude::*;

use crate::canon::is_canonical;
use crate::error::GraphError;
use crate::graph::Graph;

pub const MAX_ENUM_N: usize = 8;

/// The pairs (u, v) indexing mask bits for an n-vertex scan.
fn pair_table(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

fn graph_of_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        let (u, v) = pairs[b];
        g.insert_edge(u, v);
        m &= m - 1;
    }
    g
}

fn connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut reached: u32 = 1;
    loop {
        let mut next = reached;
        let mut m = reached;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            next |= g.neighbors(v);
            m &= m - 1;
        }
        if next == reached {
            break;
        }
        reached = next;
    }
    reached == g.vertex_mask()
}

/// Scans `start..end`, keeping canonical representatives. The working graph
/// is updated incrementally: consecutive masks differ in an amortized
/// constant number of edge flips.
fn scan_range(
    n: usize,
    pairs: &[(usize, usize)],
    start: u64,
    end: u64,
    connected_only: bool,
) -> Vec<Graph> {
    let mut out = Vec::new();
    if start >= end {
        return out;
    }
    let mut g = graph_of_mask(n, pairs, start);
    let mut mask = start;
    loop {
        if is_canonical(&g) && (!connected_only || connected(&g)) {
            out.push(g);
        }
        let next = mask + 1;
        if next == end {
            break;
        }
        let mut diff = mask ^ next;
        while diff != 0 {
            let b = diff.trailing_zeros() as usize;
            let (u, v) = pairs[b];
            if next & (1 << b) != 0 {
                g.insert_edge(u, v);
            } else {
                g.remove_edge(u, v);
            }
            diff &= diff - 1;
        }
        mask = next;
    }
    out
}

/// All canonical representatives on exactly `n` vertices, ascending mask
/// order. `1 <= n <= 8`.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(GraphError::InvalidParameter(format!(
            "enumeration supports 1..=8 vertices, got {n}"
        )));
    }
    let pairs = pair_table(n);
    let total: u64 = 1 << pairs.len();
    Ok(scan_range(n, &pairs, 0, total, connected_only))
}

/// Parallel variant with identical output (chunked scan, chunks in order).
pub fn enumerate_graphs_par(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(GraphError::InvalidParameter(format!(
            "enumeration supports 1..=8 vertices, got {n}"
        )));
    }
    let pairs = pair_table(n);
    let bits = pairs.len();
    let total: u64 = 1 << bits;
    let chunk: u64 = 1 << bits.min(16);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let mut chunks: Vec<Vec<Graph>> = Vec::new();
    starts
        .par_iter()
        .map(|&start| scan_range(n, &pairs, start, (start + chunk).min(total), connected_only))
        .collect_into_vec(&mut chunks);
    Ok(chunks.concat())
}

/// All isomorphism classes with `1..=n` vertices.
pub fn enumerate_graphs_upto(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_graphs(k, connected_only)?);
    }
    Ok(out)
}
