//! Named small graphs used throughout the toolkit and its test suites.

use crate::error::GraphError;
use crate::graph::Graph;

/// Identifier for a catalog graph. Each id builds exactly one graph up to
/// isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogId {
    /// Complete graph K_n.
    Complete(usize),
    /// Cycle C_n, n >= 3.
    Cycle(usize),
    /// Wheel W_k: rim C_k plus a hub joined to every rim vertex, k >= 3.
    Wheel(usize),
    /// Two triangles joined by a perfect matching (the complement of C6).
    Prism,
    /// i-multiedge m_i: terminals x, y joined by one plain edge and i-1
    /// once-subdivided edges, i >= 1.
    Multiedge(usize),
    /// K_{2,3} with a pendant edge attached to one of its degree-2 vertices.
    Xi,
    K5,
    K33,
    /// K5 minus one edge.
    K5Minus,
    /// K_{3,3} minus one edge.
    K33Minus,
    Petersen,
}

/// Builds the catalog graph for `id`, or an error for invalid parameters.
pub fn make_catalog(id: CatalogId) -> Result<Graph, GraphError> {
    match id {
        CatalogId::Complete(n) => {
            if n > 32 {
                return Err(GraphError::TooManyVertices(n));
            }
            Ok(complete(n))
        }
        CatalogId::Cycle(n) => {
            if !(3..=32).contains(&n) {
                return Err(GraphError::InvalidParameter(format!("C({n}) requires 3 <= n <= 32")));
            }
            Ok(cycle(n))
        }
        CatalogId::Wheel(k) => {
            if !(3..=31).contains(&k) {
                return Err(GraphError::InvalidParameter(format!("Wheel({k}) requires 3 <= k <= 31")));
            }
            Ok(wheel(k))
        }
        CatalogId::Prism => Ok(prism()),
        CatalogId::Multiedge(i) => {
            if !(1..=31).contains(&i) {
                return Err(GraphError::InvalidParameter(format!("M({i}) requires 1 <= i <= 31")));
            }
            Ok(multiedge(i))
        }
        CatalogId::Xi => Ok(xi()),
        CatalogId::K5 => Ok(complete(5)),
        CatalogId::K33 => Ok(k33()),
        CatalogId::K5Minus => Ok(k5_minus()),
        CatalogId::K33Minus => Ok(k33_minus()),
        CatalogId::Petersen => Ok(petersen()),
    }
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.insert_edge(v, (v + 1) % n);
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    g
}

/// Rim vertices 0..k, hub k.
pub fn wheel(k: usize) -> Graph {
    assert!(k >= 3);
    let mut g = Graph::empty(k + 1);
    for v in 0..k {
        g.insert_edge(v, (v + 1) % k);
        g.insert_edge(v, k);
    }
    g
}

/// Triangles {0,1,2} and {3,4,5}, matching i -- i+3.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in 0..b {
            g.insert_edge(u, a + v);
        }
    }
    g
}

/// Terminals 0 and 1; vertices 2..=i subdivide the remaining i-1 connections.
pub fn multiedge(i: usize) -> Graph {
    assert!(i >= 1);
    let mut g = Graph::empty(i + 1);
    g.insert_edge(0, 1);
    for w in 2..=i {
        g.insert_edge(0, w);
        g.insert_edge(w, 1);
    }
    g
}

/// K_{2,3} on {0,1 | 2,3,4} plus the pendant edge (4,5).
pub fn xi() -> Graph {
    let k23 = complete_bipartite(2, 3);
    let mut g = Graph::empty(6);
    for (u, v) in k23.edges() {
        g.insert_edge(u, v);
    }
    g.insert_edge(4, 5);
    g
}

pub fn k33() -> Graph {
    complete_bipartite(3, 3)
}

pub fn k5_minus() -> Graph {
    complete(5).delete_edge(3, 4).unwrap()
}

pub fn k33_minus() -> Graph {
    k33().delete_edge(2, 5).unwrap()
}

/// Outer C5, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    Graph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )
}
