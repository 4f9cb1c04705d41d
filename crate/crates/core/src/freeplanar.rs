//! Free-planar recognition by three independent routes:
//!
//! - by definition: planar and still planar after adding any one edge;
//! - by forbidden minors: excludes K5 minus an edge and K3,3 minus an edge;
//! - structurally: every triconnected component of every block is a
//!   polygon, a bond, a wheel with admissible virtual edges, or a prism
//!   with no virtual edge on a triangle.
//!
//! The three verdicts agree on every graph (verified exhaustively up to 7
//! vertices by the acceptance suite); disagreement anywhere would falsify
//! the toolkit, so every recognizer returns a checkable witness when it
//! rejects.

use std::fmt;

use crate::catalog;
use crate::connectivity::{blocks, connected_components, is_3_connected};
use crate::error::GraphError;
use crate::graph::Graph;
use crate::minor::{find_minor_model, has_minor, MinorModel};
use crate::planarity::{is_planar_fast, kuratowski_certificate};
use crate::triconnected::{decompose_3connected, ComponentKind, MultiGraphComponent};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Definition,
    Minors,
    Structural,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Definition => "def",
            Route::Minors => "minors",
            Route::Structural => "structure",
        })
    }
}

/// Evidence that a graph is not free-planar. Every variant verifies.
#[derive(Debug, Clone)]
pub enum FreePlanarWitness {
    /// The graph itself is nonplanar: a Kuratowski minor model.
    NonplanarInput(MinorModel),
    /// Adding this non-edge breaks planarity; the model lives in g + uv.
    BreakingEdge {
        u: usize,
        v: usize,
        kuratowski: MinorModel,
    },
    /// A reduced-Kuratowski minor model in the graph itself.
    ReducedKuratowskiMinor(MinorModel),
    /// A triconnected component the structural classifier rejects.
    RejectedComponent { description: String },
}

impl FreePlanarWitness {
    pub fn summary(&self) -> String {
        match self {
            FreePlanarWitness::NonplanarInput(m) => {
                format!("nonplanar:{}", pattern_name(m.pattern()))
            }
            FreePlanarWitness::BreakingEdge { u, v, kuratowski } => {
                format!("+({u},{v})->{}", pattern_name(kuratowski.pattern()))
            }
            FreePlanarWitness::ReducedKuratowskiMinor(m) => {
                format!("minor:{}", pattern_name(m.pattern()))
            }
            FreePlanarWitness::RejectedComponent { description } => {
                format!("component:{description}")
            }
        }
    }
}

fn pattern_name(p: &Graph) -> &'static str {
    use crate::canon::is_isomorphic;
    if is_isomorphic(p, &catalog::complete(5)) {
        "K5"
    } else if is_isomorphic(p, &catalog::k33()) {
        "K33"
    } else if is_isomorphic(p, &catalog::k5_minus()) {
        "K5-"
    } else if is_isomorphic(p, &catalog::k33_minus()) {
        "K33-"
    } else {
        "pattern"
    }
}

#[derive(Debug, Clone)]
pub struct FreePlanarVerdict {
    pub is_free_planar: bool,
    pub route: Route,
    pub witness: Option<FreePlanarWitness>,
}

impl FreePlanarVerdict {
    fn accept(route: Route) -> FreePlanarVerdict {
        FreePlanarVerdict {
            is_free_planar: true,
            route,
            witness: None,
        }
    }

    fn reject(route: Route, witness: FreePlanarWitness) -> FreePlanarVerdict {
        FreePlanarVerdict {
            is_free_planar: false,
            route,
            witness: Some(witness),
        }
    }
}

/// One-line external record: `<graph6> <planar:0|1> <freeplanar:0|1> <route> [witness]`.
pub fn verdict_record(g: &Graph, planar: bool, v: &FreePlanarVerdict) -> String {
    let mut line = format!(
        "{} {} {} {}",
        crate::graph6::write_graph6(g),
        planar as u8,
        v.is_free_planar as u8,
        v.route
    );
    if let Some(w) = &v.witness {
        line.push(' ');
        line.push_str(&w.summary());
    }
    line
}

/// By the definition: planar, and planar after any single edge addition.
/// Complete graphs have no addable edge, so the first conjunct decides them.
pub fn is_free_planar_def(g: &Graph) -> FreePlanarVerdict {
    if !is_planar_fast(g) {
        let m = kuratowski_certificate(g).expect("nonplanar graph has a Kuratowski minor");
        return FreePlanarVerdict::reject(Route::Definition, FreePlanarWitness::NonplanarInput(m));
    }
    for (u, v) in g.non_edges() {
        let extended = g.add_edge(u, v).expect("non-edge");
        if !is_planar_fast(&extended) {
            let m = kuratowski_certificate(&extended).expect("nonplanar extension");
            return FreePlanarVerdict::reject(
                Route::Definition,
                FreePlanarWitness::BreakingEdge { u, v, kuratowski: m },
            );
        }
    }
    FreePlanarVerdict::accept(Route::Definition)
}

/// By forbidden minors: excludes both reduced Kuratowski graphs.
pub fn is_free_planar_minors(g: &Graph) -> FreePlanarVerdict {
    for pattern in [catalog::k5_minus(), catalog::k33_minus()] {
        if let Some(m) = find_minor_model(g, &pattern) {
            return FreePlanarVerdict::reject(
                Route::Minors,
                FreePlanarWitness::ReducedKuratowskiMinor(m),
            );
        }
    }
    FreePlanarVerdict::accept(Route::Minors)
}

/// Structural route: split into blocks, decompose each block, classify
/// every triconnected component.
pub fn is_free_planar_structural(g: &Graph) -> FreePlanarVerdict {
    for comp_mask in connected_components(g) {
        let (comp, _) = g.induced(comp_mask);
        for block in blocks(&comp) {
            if block.graph.n() < 3 {
                continue; // bridge edges are always fine
            }
            let tree = decompose_3connected(&block.graph)
                .expect("blocks with >= 3 vertices are 2-connected");
            for node in &tree.components {
                match classify_component(node) {
                    Ok(cls) if cls.acceptable => {}
                    Ok(cls) => {
                        return FreePlanarVerdict::reject(
                            Route::Structural,
                            FreePlanarWitness::RejectedComponent { description: cls.label },
                        );
                    }
                    Err(e) => {
                        return FreePlanarVerdict::reject(
                            Route::Structural,
                            FreePlanarWitness::RejectedComponent {
                                description: format!("malformed component: {e}"),
                            },
                        );
                    }
                }
            }
        }
    }
    FreePlanarVerdict::accept(Route::Structural)
}

#[derive(Debug, Clone)]
pub struct ComponentClass {
    pub acceptable: bool,
    pub label: String,
}

/// Classifies one triconnected component:
///
/// - polygons and bonds are always acceptable, whatever is virtual;
/// - a wheel W_k is acceptable if under some hub labeling all virtual edges
///   are spokes (only for k = 3) or all are rim edges;
/// - a prism is acceptable if no virtual edge lies on a triangle;
/// - every other proper 3-connected node is rejected.
pub fn classify_component(c: &MultiGraphComponent) -> Result<ComponentClass, GraphError> {
    match c.kind {
        ComponentKind::Polygon => {
            return Ok(ComponentClass {
                acceptable: true,
                label: format!("polygon C{}", c.vertices.len()),
            })
        }
        ComponentKind::Bond => {
            return Ok(ComponentClass {
                acceptable: true,
                label: format!("bond m{}", c.edge_multiplicity()),
            })
        }
        ComponentKind::ProperThreeConnected => {}
    }
    let (g, map) = c.simple_graph();
    if g.edge_count() != c.edges.len() {
        return Err(GraphError::InvalidParameter(
            "proper 3-connected node with parallel edges".into(),
        ));
    }
    if !is_3_connected(&g) {
        return Err(GraphError::InvalidParameter(
            "node marked proper 3-connected is not".into(),
        ));
    }
    // virtual edges in local indices
    let virtuals: Vec<(usize, usize)> = c
        .edges
        .iter()
        .filter(|e| e.is_virtual)
        .map(|e| {
            let lu = map.binary_search(&e.u).unwrap();
            let lv = map.binary_search(&e.v).unwrap();
            (lu.min(lv), lu.max(lv))
        })
        .collect();

    if let Some(label) = wheel_acceptance(&g, &virtuals) {
        return Ok(ComponentClass {
            acceptable: true,
            label,
        });
    }
    if crate::canon::is_isomorphic(&g, &catalog::prism()) {
        let bad = virtuals.iter().find(|&&(u, v)| on_triangle(&g, u, v));
        return Ok(match bad {
            None => ComponentClass {
                acceptable: true,
                label: "prism".into(),
            },
            Some(&(u, v)) => ComponentClass {
                acceptable: false,
                label: format!("prism with virtual triangle edge ({u},{v})"),
            },
        });
    }
    if is_wheel_shape(&g).is_some() {
        return Ok(ComponentClass {
            acceptable: false,
            label: format!("wheel W{} with inadmissible virtual edges", g.n() - 1),
        });
    }
    Ok(ComponentClass {
        acceptable: false,
        label: format!("proper 3-connected non-wheel non-prism on {} vertices", g.n()),
    })
}

/// The hub of `g` if it is a wheel (for K4 the first candidate).
fn is_wheel_shape(g: &Graph) -> Option<usize> {
    wheel_hubs(g).into_iter().next()
}

fn wheel_hubs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n < 4 {
        return Vec::new();
    }
    let mut hubs = Vec::new();
    for h in g.vertices() {
        if g.degree(h) != n - 1 {
            continue;
        }
        let rim_mask = g.vertex_mask() & !(1 << h);
        let (rim, _) = g.induced(rim_mask);
        let is_cycle =
            rim.n() >= 3 && (0..rim.n()).all(|v| rim.degree(v) == 2) && crate::connectivity::is_connected(&rim);
        if is_cycle {
            hubs.push(h);
        }
    }
    hubs
}

/// Acceptance label if `g` is a wheel whose virtual edges fit case 1 or 2
/// under some hub choice.
fn wheel_acceptance(g: &Graph, virtuals: &[(usize, usize)]) -> Option<String> {
    let hubs = wheel_hubs(g);
    let k = g.n().saturating_sub(1);
    for h in hubs {
        let all_spokes = virtuals.iter().all(|&(u, v)| u == h || v == h);
        let all_rim = virtuals.iter().all(|&(u, v)| u != h && v != h);
        if all_rim {
            return Some(format!("wheel W{k} (virtual edges on rim, hub {h})"));
        }
        if k == 3 && all_spokes {
            return Some(format!("wheel W3 (virtual edges on spokes, hub {h})"));
        }
    }
    None
}

fn on_triangle(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & g.neighbors(v) != 0
}

/// True iff `g` excludes both the pendant-K23 graph and the 4-multiedge as
/// minors. Precondition: `g` is 3-connected.
pub fn check_no_xi_and_m4(g: &Graph) -> Result<bool, GraphError> {
    if !is_3_connected(g) {
        return Err(GraphError::InvalidParameter("graph must be 3-connected".into()));
    }
    Ok(!has_minor(g, &catalog::xi()) && !has_minor(g, &catalog::multiedge(4)))
}

/// Outerplanarity as exclusion of K4 and K2,3 minors.
pub fn is_outerplanar(g: &Graph) -> bool {
    !has_minor(g, &catalog::complete(4)) && !has_minor(g, &catalog::complete_bipartite(2, 3))
}

/// Some edge whose deletion leaves the graph outerplanar. Meaningful for
/// 3-connected free-planar inputs, where such an edge always exists.
pub fn exists_outerplanar_edge(g: &Graph) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| is_outerplanar(&g.delete_edge(u, v).unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triconnected::ComponentEdge;

    fn routes(g: &Graph) -> [bool; 3] {
        [
            is_free_planar_def(g).is_free_planar,
            is_free_planar_minors(g).is_free_planar,
            is_free_planar_structural(g).is_free_planar,
        ]
    }

    #[test]
    fn reduced_kuratowski_graphs_are_not_free_planar() {
        let v = is_free_planar_def(&catalog::k5_minus());
        assert!(!v.is_free_planar);
        match v.witness {
            Some(FreePlanarWitness::BreakingEdge { u, v, .. }) => assert_eq!((u, v), (3, 4)),
            w => panic!("expected breaking edge, got {w:?}"),
        }
        assert_eq!(routes(&catalog::k5_minus()), [false; 3]);
        assert_eq!(routes(&catalog::k33_minus()), [false; 3]);
    }

    #[test]
    fn cycles_and_wheels_are_free_planar() {
        assert_eq!(routes(&catalog::cycle(7)), [true; 3]);
        assert_eq!(routes(&catalog::complete(4)), [true; 3]);
        assert_eq!(routes(&catalog::wheel(5)), [true; 3]);
        assert_eq!(routes(&catalog::prism()), [true; 3]);
    }

    #[test]
    fn complete_graphs_resolve_by_planarity() {
        assert_eq!(routes(&catalog::complete(5)), [false; 3]);
        let v = is_free_planar_def(&catalog::complete(5));
        assert!(matches!(v.witness, Some(FreePlanarWitness::NonplanarInput(_))));
    }

    #[test]
    fn subdivided_spoke_breaks_free_planarity() {
        // spoke (0, 5) of W5: rim 0..5, hub 5
        let g = catalog::wheel(5).subdivide_edge(0, 5).unwrap();
        assert_eq!(routes(&g), [false; 3]);
        let v = is_free_planar_minors(&g);
        match v.witness {
            Some(FreePlanarWitness::ReducedKuratowskiMinor(m)) => assert!(m.verify()),
            w => panic!("expected minor witness, got {w:?}"),
        }
    }

    #[test]
    fn subdivided_prism_triangle_edge_breaks_free_planarity() {
        let g = catalog::prism().subdivide_edge(0, 1).unwrap();
        assert_eq!(routes(&g), [false; 3]);
        // a matching edge is fine
        let g = catalog::prism().subdivide_edge(0, 3).unwrap();
        assert_eq!(routes(&g), [true; 3]);
    }

    #[test]
    fn two_c4s_sharing_an_edge_agree_across_routes() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 1)]);
        let expected = is_free_planar_def(&g).is_free_planar;
        assert_eq!(is_free_planar_structural(&g).is_free_planar, expected);
        assert_eq!(is_free_planar_minors(&g).is_free_planar, expected);
    }

    fn k4_component(virtuals: &[(usize, usize)]) -> MultiGraphComponent {
        let mut edges = Vec::new();
        for u in 0..4usize {
            for v in u + 1..4 {
                edges.push(ComponentEdge {
                    u,
                    v,
                    is_virtual: virtuals.contains(&(u, v)),
                });
            }
        }
        MultiGraphComponent {
            vertices: vec![0, 1, 2, 3],
            edges,
            kind: ComponentKind::ProperThreeConnected,
        }
    }

    #[test]
    fn k4_virtual_edge_rules() {
        // two non-adjacent virtual edges: rejected
        let c = k4_component(&[(0, 1), (2, 3)]);
        assert!(!classify_component(&c).unwrap().acceptable);
        // two adjacent virtual edges: spokes under the shared vertex as hub
        let c = k4_component(&[(0, 1), (0, 2)]);
        assert!(classify_component(&c).unwrap().acceptable);
        // a triangle of virtual edges: the rim of W3
        let c = k4_component(&[(0, 1), (0, 2), (1, 2)]);
        assert!(classify_component(&c).unwrap().acceptable);
        // no virtual edges at all
        let c = k4_component(&[]);
        assert!(classify_component(&c).unwrap().acceptable);
    }

    #[test]
    fn wheel_and_prism_component_rules() {
        // W4 with all rim edges virtual: acceptable
        let w4 = catalog::wheel(4);
        let edges: Vec<ComponentEdge> = w4
            .edges()
            .map(|(u, v)| ComponentEdge {
                u,
                v,
                is_virtual: u != 4 && v != 4,
            })
            .collect();
        let c = MultiGraphComponent {
            vertices: (0..5).collect(),
            edges,
            kind: ComponentKind::ProperThreeConnected,
        };
        assert!(classify_component(&c).unwrap().acceptable);

        // W4 with one spoke virtual: rejected
        let edges: Vec<ComponentEdge> = w4
            .edges()
            .map(|(u, v)| ComponentEdge {
                u,
                v,
                is_virtual: (u, v) == (0, 4),
            })
            .collect();
        let c = MultiGraphComponent {
            vertices: (0..5).collect(),
            edges,
            kind: ComponentKind::ProperThreeConnected,
        };
        assert!(!classify_component(&c).unwrap().acceptable);

        // prism with a matching edge virtual: acceptable
        let prism = catalog::prism();
        let edges: Vec<ComponentEdge> = prism
            .edges()
            .map(|(u, v)| ComponentEdge {
                u,
                v,
                is_virtual: (u, v) == (0, 3),
            })
            .collect();
        let c = MultiGraphComponent {
            vertices: (0..6).collect(),
            edges,
            kind: ComponentKind::ProperThreeConnected,
        };
        assert!(classify_component(&c).unwrap().acceptable);

        // prism with a triangle edge virtual: rejected
        let edges: Vec<ComponentEdge> = prism
            .edges()
            .map(|(u, v)| ComponentEdge {
                u,
                v,
                is_virtual: (u, v) == (0, 1),
            })
            .collect();
        let c = MultiGraphComponent {
            vertices: (0..6).collect(),
            edges,
            kind: ComponentKind::ProperThreeConnected,
        };
        assert!(!classify_component(&c).unwrap().acceptable);
    }

    #[test]
    fn xi_and_m4_checks() {
        assert!(check_no_xi_and_m4(&catalog::wheel(6)).unwrap());
        assert!(check_no_xi_and_m4(&catalog::prism()).unwrap());
        assert!(!check_no_xi_and_m4(&catalog::complete(5)).unwrap());
        assert!(check_no_xi_and_m4(&catalog::cycle(5)).is_err());
    }

    #[test]
    fn outerplanar_edges_exist_for_3_connected_fp_graphs() {
        for g in [catalog::complete(4), catalog::wheel(4), catalog::wheel(6), catalog::prism()] {
            let (u, v) = exists_outerplanar_edge(&g).expect("edge must exist");
            assert!(is_outerplanar(&g.delete_edge(u, v).unwrap()));
        }
        assert!(is_outerplanar(&catalog::cycle(4)));
        assert!(!is_outerplanar(&catalog::complete(4)));
        assert!(!is_outerplanar(&catalog::complete_bipartite(2, 3)));
    }
}
