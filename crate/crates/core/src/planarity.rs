//! Planarity by two independent routes.
//!
//! `is_planar_minor` excludes K5 and K3,3 as minors; `is_planar_fast` is a
//! classical incremental face-embedding algorithm (Demoucron-Malgrange-
//! Pertuiset) run per block. The two routes share no code and cross-check
//! each other exhaustively in the verification harness.

use crate::catalog;
use crate::connectivity::{blocks, connected_components};
use crate::graph::Graph;
use crate::minor::{find_minor_model, has_minor, MinorModel};

/// Planarity as exclusion of the Kuratowski minors.
pub fn is_planar_minor(g: &Graph) -> bool {
    !has_minor(g, &catalog::complete(5)) && !has_minor(g, &catalog::k33())
}

/// A verified model of K5 or K3,3 when `g` is nonplanar, `None` otherwise.
pub fn kuratowski_certificate(g: &Graph) -> Option<MinorModel> {
    if let Some(m) = find_minor_model(g, &catalog::complete(5)) {
        return Some(m);
    }
    find_minor_model(g, &catalog::k33())
}

/// Combinatorial planarity test: Euler pre-filter, block decomposition,
/// then face-by-face path addition within each block.
pub fn is_planar_fast(g: &Graph) -> bool {
    let n = g.n();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    if n <= 4 {
        return true;
    }
    for comp in connected_components(g) {
        let (sub, _) = g.induced(comp);
        for block in blocks(&sub) {
            if block.graph.n() >= 5 && !dmp_planar(&block.graph) {
                return false;
            }
        }
    }
    true
}

/// DMP on a 2-connected graph with at least 5 vertices.
fn dmp_planar(g: &Graph) -> bool {
    let n = g.n();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    let cycle = some_cycle(g).expect("2-connected block has a cycle");

    // embedded subgraph: vertex mask + edge set
    let mut in_h = 0u32;
    for &v in &cycle {
        in_h |= 1 << v;
    }
    let mut h_edges = vec![0u32; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        h_edges[a] |= 1 << b;
        h_edges[b] |= 1 << a;
    }
    // faces as boundary cycles; the initial cycle bounds both sides
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let frags = fragments(g, in_h, &h_edges);
        if frags.is_empty() {
            return true;
        }
        // fragment with fewest admissible faces; forced fragments first
        let mut pick: Option<(usize, Vec<usize>)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let mut fmask = 0u32;
                    for &v in f.iter() {
                        fmask |= 1 << v;
                    }
                    frag.attachments & !fmask == 0
                })
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return false;
            }
            let better = match &pick {
                None => true,
                Some((_, adm)) => admissible.len() < adm.len(),
            };
            if better {
                let forced = admissible.len() == 1;
                pick = Some((fi, admissible));
                if forced {
                    break;
                }
            }
        }
        let (fi, admissible) = pick.unwrap();
        let frag = &frags[fi];
        let path = frag.alpha_path(g);
        let face_idx = admissible[0];
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        for w in &path {
            in_h |= 1 << w;
        }
        for win in path.windows(2) {
            h_edges[win[0]] |= 1 << win[1];
            h_edges[win[1]] |= 1 << win[0];
        }
    }
}

struct Fragment {
    /// interior vertices (empty for a chord)
    interior: u32,
    /// attachment vertices on the embedded subgraph
    attachments: u32,
    /// a chord fragment stores its single edge
    chord: Option<(usize, usize)>,
}

impl Fragment {
    /// A path between two distinct attachments routed strictly through the
    /// fragment interior (so every edge it embeds belongs to the fragment).
    fn alpha_path(&self, g: &Graph) -> Vec<usize> {
        if let Some((a, b)) = self.chord {
            return vec![a, b];
        }
        let a = self.attachments.trailing_zeros() as usize;
        let goal = self.attachments & !(1 << a);
        let mut prev = vec![usize::MAX; g.n()];
        let mut queue = std::collections::VecDeque::new();
        let mut seen = 0u32;
        for w in g.neighbors_iter(a) {
            if self.interior & (1 << w) != 0 {
                seen |= 1 << w;
                prev[w] = a;
                queue.push_back(w);
            }
        }
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors_iter(v) {
                if goal & (1 << w) != 0 {
                    let mut path = vec![w, v];
                    let mut cur = v;
                    while prev[cur] != usize::MAX {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return path;
                }
                if self.interior & (1 << w) != 0 && seen & (1 << w) == 0 {
                    seen |= 1 << w;
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragment with >= 2 attachments is connected through its interior");
    }
}

fn fragments(g: &Graph, in_h: u32, h_edges: &[u32]) -> Vec<Fragment> {
    let mut out = Vec::new();
    // chords: unembedded edges between embedded vertices
    for (u, v) in g.edges() {
        if in_h & (1 << u) != 0 && in_h & (1 << v) != 0 && h_edges[u] & (1 << v) == 0 {
            out.push(Fragment {
                interior: 0,
                attachments: (1 << u) | (1 << v),
                chord: Some((u, v)),
            });
        }
    }
    // proper fragments: components of g - V(H) plus their attachments
    let outside = g.vertex_mask() & !in_h;
    let mut remaining = outside;
    while remaining != 0 {
        let s = remaining.trailing_zeros() as usize;
        let comp = crate::connectivity::reach(g, s, outside);
        remaining &= !comp;
        let mut attachments = 0u32;
        let mut m = comp;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            attachments |= g.neighbors(v) & in_h;
            m &= m - 1;
        }
        out.push(Fragment {
            interior: comp,
            attachments,
            chord: None,
        });
    }
    out
}

/// Splits `face` along `path` (whose endpoints lie on the face boundary).
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let ia = face.iter().position(|&v| v == a).unwrap();
    let ib = face.iter().position(|&v| v == b).unwrap();
    let len = face.len();
    // boundary from a to b (inclusive), walking forward
    let mut side1 = Vec::new();
    let mut i = ia;
    loop {
        side1.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % len;
    }
    // boundary from b to a (inclusive)
    let mut side2 = Vec::new();
    let mut i = ib;
    loop {
        side2.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % len;
    }
    let inner: Vec<usize> = path[1..path.len() - 1].to_vec();
    let mut f1 = side1;
    f1.extend(inner.iter().rev());
    let mut f2 = side2;
    f2.extend(inner.iter());
    (f1, f2)
}

/// Any cycle of `g`, as a vertex sequence (DFS back edge).
fn some_cycle(g: &Graph) -> Option<Vec<usize>> {
    fn dfs(
        g: &Graph,
        v: usize,
        from: usize,
        state: &mut [u8],
        parent: &mut [usize],
    ) -> Option<(usize, usize)> {
        state[v] = 1;
        for w in g.neighbors_iter(v) {
            if w == from {
                continue;
            }
            if state[w] == 1 {
                return Some((v, w));
            }
            if state[w] == 0 {
                parent[w] = v;
                if let Some(hit) = dfs(g, w, v, state, parent) {
                    return Some(hit);
                }
            }
        }
        state[v] = 2;
        None
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] == 0 {
            if let Some((v, w)) = dfs(g, root, usize::MAX, &mut state, &mut parent) {
                let mut cyc = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur];
                    cyc.push(cur);
                }
                cyc.reverse();
                return Some(cyc);
            }
        }
    }
    None
}
