//! Glue-back round trip for the triconnected decomposition: every
//! 2-connected graph up to 7 vertices reassembles exactly, every component
//! has a legal kind, and no virtual pair joins two nodes of the same
//! mergeable kind. (The 8-vertex sweep runs in the acceptance harness.)

use minorkit::connectivity::{is_2_connected, is_3_connected};
use minorkit::enumerate::enumerate_graphs_upto;
use minorkit::triconnected::{decompose_3connected, ComponentKind};

#[test]
fn glue_back_reproduces_every_2_connected_graph_up_to_7() {
    let mut checked = 0;
    for g in enumerate_graphs_upto(7, true).unwrap() {
        if !is_2_connected(&g) {
            continue;
        }
        let tree = decompose_3connected(&g).unwrap();
        assert_eq!(tree.glue_all(), g, "glue-back failed for {g:?}");
        for comp in &tree.components {
            match comp.kind {
                ComponentKind::Polygon => {
                    assert_eq!(comp.vertices.len(), comp.edges.len());
                    assert!(comp.vertices.len() >= 3);
                }
                ComponentKind::Bond => {
                    assert_eq!(comp.vertices.len(), 2);
                    assert!(comp.edges.len() >= 3);
                }
                ComponentKind::ProperThreeConnected => {
                    let (simple, _) = comp.simple_graph();
                    assert_eq!(simple.edge_count(), comp.edges.len());
                    assert!(is_3_connected(&simple));
                }
            }
        }
        for &((ci, ei), (cj, ej)) in &tree.pairing {
            assert!(tree.components[ci].edges[ei].is_virtual);
            assert!(tree.components[cj].edges[ej].is_virtual);
            let (ki, kj) = (tree.components[ci].kind, tree.components[cj].kind);
            assert!(
                !(ki == kj && ki != ComponentKind::ProperThreeConnected),
                "adjacent same-kind components in {g:?}"
            );
        }
        // every virtual edge is paired exactly once
        let virtuals: usize = tree
            .components
            .iter()
            .map(|c| c.edges.iter().filter(|e| e.is_virtual).count())
            .sum();
        assert_eq!(virtuals, 2 * tree.pairing.len());
        checked += 1;
    }
    assert!(checked > 400, "expected hundreds of 2-connected graphs, got {checked}");
}
