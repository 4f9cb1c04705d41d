//! The exhaustive theorem-verification harness: every checkable claim the
//! toolkit implements, run over all small graphs, with one report per
//! theorem. Reports are deterministic byte-for-byte for a given
//! configuration regardless of worker count; wall-clock timings are kept
//! out of the report body for exactly that reason.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::json;

use minorkit::bridges::{extract_certificate, CaseUsed};
use minorkit::canon::is_isomorphic;
use minorkit::catalog;
use minorkit::connectivity::{is_2_connected, is_3_connected, is_properly_3_connected};
use minorkit::enumerate::{enumerate_graphs_par, enumerate_graphs_upto};
use minorkit::freeop::{edge_deleted_set, free_forbidden, vertex_split_set};
use minorkit::freeplanar::{
    is_free_planar_def, is_free_planar_minors, is_free_planar_structural,
};
use minorkit::graph::Graph;
use minorkit::graph6::write_graph6;
use minorkit::minor::{excludes_all, has_minor};
use minorkit::planarity::{is_planar_fast, is_planar_minor};
use minorkit::GraphSet;

use crate::records::OutputFormat;

pub const MAX_SUPPORTED_N: usize = 8;

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub id: &'static str,
    pub instances: usize,
    pub violations: Vec<String>,
    pub notes: Option<String>,
    pub wall: Duration,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Deterministic text rendering (no timings).
    pub fn render_text(&self) -> String {
        let mut line = format!(
            "THEOREM {:<18} {} instances={}",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances
        );
        if let Some(n) = &self.notes {
            line.push_str(&format!(" ({n})"));
        }
        for v in &self.violations {
            line.push_str(&format!("\n  violation: {v}"));
        }
        line
    }

    pub fn render_jsonl(&self) -> String {
        json!({
            "theorem": self.id,
            "pass": self.passed(),
            "instances": self.instances,
            "violations": self.violations,
            "notes": self.notes,
        })
        .to_string()
    }
}

/// Runs every theorem check with enumeration bound `max_n` on a dedicated
/// pool of `jobs` workers.
pub fn verify_theorems(max_n: usize, jobs: usize) -> Result<Vec<TheoremReport>, String> {
    if max_n == 0 || max_n > MAX_SUPPORTED_N {
        return Err(format!("--max-n must be between 1 and {MAX_SUPPORTED_N}, got {max_n}"));
    }
    if jobs == 0 {
        return Err("worker count must be at least 1".into());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| e.to_string())?;
    Ok(pool.install(|| run_all(max_n)))
}

fn run_all(max_n: usize) -> Vec<TheoremReport> {
    let connected: Vec<Graph> = (1..=max_n)
        .flat_map(|n| enumerate_graphs_par(n, true).expect("in range"))
        .collect();
    let mut reports = Vec::new();
    reports.push(planarity_report(&connected));
    reports.push(fpg_report(&connected));
    reports.push(lc_report(&connected));
    reports.push(mth_report(&connected));
    let (xi, ls) = xi_ls_reports(&connected);
    reports.push(xi);
    reports.push(ls);
    reports.push(pw_report(&connected, max_n));
    reports.push(prism_subdivision_report());
    reports.push(wheel_subdivision_report());
    reports.push(tetra_subdivision_report());
    reports.push(kfpg_report());
    reports.push(fig7_report());
    reports.push(two_edge_lemma_report());
    reports.push(free_operator_report());
    reports.push(certifier_report(&connected, max_n));
    reports
}

pub fn render_reports(reports: &[TheoremReport], format: OutputFormat) -> String {
    let mut out = String::new();
    for r in reports {
        match format {
            OutputFormat::Text => out.push_str(&r.render_text()),
            OutputFormat::Jsonl => out.push_str(&r.render_jsonl()),
        }
        out.push('\n');
    }
    out
}

fn report(
    id: &'static str,
    instances: usize,
    violations: Vec<String>,
    notes: Option<String>,
    started: Instant,
) -> TheoremReport {
    TheoremReport {
        id,
        instances,
        violations,
        notes,
        wall: started.elapsed(),
    }
}

/// The two planarity routes agree everywhere.
fn planarity_report(connected: &[Graph]) -> TheoremReport {
    let t = Instant::now();
    let violations: Vec<String> = connected
        .par_iter()
        .filter_map(|g| {
            (is_planar_fast(g) != is_planar_minor(g)).then(|| write_graph6(g))
        })
        .collect();
    report("planarity", connected.len(), violations, None, t)
}

/// Free-planarity by definition equals free-planarity by reduced minors.
fn fpg_report(connected: &[Graph]) -> TheoremReport {
    let t = Instant::now();
    let violations: Vec<String> = connected
        .par_iter()
        .filter_map(|g| {
            let d = is_free_planar_def(g).is_free_planar;
            let m = is_free_planar_minors(g).is_free_planar;
            (d != m).then(|| format!("{} def={} minors={}", write_graph6(g), d, m))
        })
        .collect();
    report("fpg", connected.len(), violations, None, t)
}

/// The structural classification agrees with the minor route.
fn lc_report(connected: &[Graph]) -> TheoremReport {
    let t = Instant::now();
    let violations: Vec<String> = connected
        .par_iter()
        .filter_map(|g| {
            let m = is_free_planar_minors(g).is_free_planar;
            let s = is_free_planar_structural(g).is_free_planar;
            (m != s).then(|| format!("{} minors={} structure={}", write_graph6(g), m, s))
        })
        .collect();
    report("lc", connected.len(), violations, None, t)
}

/// Every single-edge extension of a free-planar graph is planar.
fn mth_report(connected: &[Graph]) -> TheoremReport {
    let t = Instant::now();
    let results: Vec<(usize, Vec<String>)> = connected
        .par_iter()
        .map(|g| {
            if !is_free_planar_minors(g).is_free_planar {
                return (0, Vec::new());
            }
            let mut bad = Vec::new();
            let mut count = 0;
            for (u, v) in g.non_edges() {
                count += 1;
                if !is_planar_fast(&g.add_edge(u, v).unwrap()) {
                    bad.push(format!("{} +({u},{v})", write_graph6(g)));
                }
            }
            (count, bad)
        })
        .collect();
    let instances = results.iter().map(|(c, _)| c).sum();
    let violations = results.into_iter().flat_map(|(_, v)| v).collect();
    report("mth", instances, violations, None, t)
}

/// 3-connected free-planar graphs exclude the pendant-K23 graph and the
/// 4-multiedge as minors.
fn xi_ls_reports(connected: &[Graph]) -> (TheoremReport, TheoremReport) {
    let t = Instant::now();
    let xi = catalog::xi();
    let m4 = catalog::multiedge(4);
    let threes: Vec<&Graph> = connected
        .par_iter()
        .filter(|g| is_3_connected(g) && is_free_planar_minors(g).is_free_planar)
        .collect();
    let xi_violations: Vec<String> = threes
        .par_iter()
        .filter_map(|g| has_minor(g, &xi).then(|| write_graph6(g)))
        .collect();
    let ls_violations: Vec<String> = threes
        .par_iter()
        .filter_map(|g| has_minor(g, &m4).then(|| write_graph6(g)))
        .collect();
    let n = threes.len();
    (
        report("xi", n, xi_violations, None, t),
        report("ls", n, ls_violations, None, t),
    )
}

/// The properly 3-connected free-planar graphs are exactly the wheels and
/// the prism.
fn pw_report(connected: &[Graph], max_n: usize) -> TheoremReport {
    let t = Instant::now();
    let found: Vec<&Graph> = connected
        .par_iter()
        .filter(|g| is_properly_3_connected(g) && is_free_planar_minors(g).is_free_planar)
        .collect();
    let mut expected: Vec<(String, Graph)> = Vec::new();
    for k in 3..max_n.max(4) {
        if k + 1 <= max_n {
            expected.push((format!("W{k}"), catalog::wheel(k)));
        }
    }
    if max_n >= 6 {
        expected.push(("prism".into(), catalog::prism()));
    }
    let mut violations = Vec::new();
    for g in &found {
        if !expected.iter().any(|(_, e)| is_isomorphic(g, e)) {
            violations.push(format!("unexpected member {}", write_graph6(g)));
        }
    }
    for (name, e) in &expected {
        if !found.iter().any(|g| is_isomorphic(g, e)) {
            violations.push(format!("missing {name}"));
        }
    }
    report(
        "pw",
        found.len().max(expected.len()),
        violations,
        Some(format!("{} classes found, {} expected", found.len(), expected.len())),
        t,
    )
}

fn fp(g: &Graph) -> bool {
    is_free_planar_minors(g).is_free_planar
}

/// Subdividing a triangle edge of the prism leaves the free-planar class;
/// subdividing matching edges never does.
fn prism_subdivision_report() -> TheoremReport {
    let t = Instant::now();
    let prism = catalog::prism();
    let mut violations = Vec::new();
    let mut instances = 0;
    let triangle_edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
    let matching = [(0, 3), (1, 4), (2, 5)];
    for (u, v) in triangle_edges {
        instances += 1;
        if fp(&prism.subdivide_edge(u, v).unwrap()) {
            violations.push(format!("triangle edge ({u},{v}) subdivided stays free-planar"));
        }
    }
    for mask in 0u32..8 {
        let mut g = prism;
        for (b, &(u, v)) in matching.iter().enumerate() {
            if mask & (1 << b) != 0 {
                g = g.subdivide_edge(u, v).unwrap();
            }
        }
        instances += 1;
        if !fp(&g) {
            violations.push(format!("matching subset {mask:03b} subdivided leaves the class"));
        }
    }
    report("subdivision-prism", instances, violations, None, t)
}

/// Subdividing any spoke of a wheel with at least four rim vertices leaves
/// the class; subdividing rim edges never does. The tetrahedron W3 is the
/// exception: its spoke subdivisions stay free-planar (its spokes may be
/// virtual in the structural classification).
fn wheel_subdivision_report() -> TheoremReport {
    let t = Instant::now();
    let mut violations = Vec::new();
    let mut instances = 0;
    for k in 3..=6usize {
        let w = catalog::wheel(k);
        for spoke in 0..k {
            let g = w.subdivide_edge(spoke, k).unwrap();
            instances += 1;
            if k == 3 {
                if !fp(&g) {
                    violations.push(format!("W3 spoke ({spoke},3) subdivided left the class"));
                }
            } else if fp(&g) {
                violations.push(format!("W{k} spoke ({spoke},{k}) subdivided stays free-planar"));
            }
        }
        for mask in 0u32..(1 << k) {
            let mut g = w;
            // subdivide the selected rim edges; subdivision appends vertices,
            // so rim endpoints keep their labels
            for r in 0..k {
                if mask & (1 << r) != 0 {
                    g = g.subdivide_edge(r, (r + 1) % k).unwrap();
                }
            }
            instances += 1;
            if !fp(&g) {
                violations.push(format!("W{k} rim subset {mask:b} subdivided left the class"));
            }
        }
    }
    report(
        "subdivision-wheel",
        instances,
        violations,
        Some("W3 spokes subdividable like its rim".into()),
        t,
    )
}

/// Two subdivided non-adjacent tetrahedron edges give exactly the reduced
/// K33; two adjacent ones stay free-planar.
fn tetra_subdivision_report() -> TheoremReport {
    let t = Instant::now();
    let k4 = catalog::complete(4);
    let mut violations = Vec::new();
    let mut instances = 0;
    let edges: Vec<(usize, usize)> = k4.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in edges.iter().skip(i + 1) {
            let adjacent = a == c || a == d || b == c || b == d;
            let g = k4.subdivide_edge(a, b).unwrap().subdivide_edge(c, d).unwrap();
            instances += 1;
            if adjacent {
                if !fp(&g) {
                    violations.push(format!("adjacent pair ({a},{b}),({c},{d}) left the class"));
                }
            } else if !is_isomorphic(&g, &catalog::k33_minus()) {
                violations.push(format!(
                    "non-adjacent pair ({a},{b}),({c},{d}) is not the reduced K33"
                ));
            }
        }
    }
    report("subdivision-tetra", instances, violations, None, t)
}

/// The operator applied to the Kuratowski pair yields exactly the two
/// reduced Kuratowski graphs.
fn kfpg_report() -> TheoremReport {
    let t = Instant::now();
    let b: GraphSet = [catalog::complete(5), catalog::k33()].into_iter().collect();
    let f = free_forbidden(&b);
    let mut violations = Vec::new();
    if f.len() != 2 {
        violations.push(format!("expected 2 classes, got {}", f.len()));
    }
    if !f.contains_iso(&catalog::k5_minus()) {
        violations.push("missing reduced K5".into());
    }
    if !f.contains_iso(&catalog::k33_minus()) {
        violations.push("missing reduced K33".into());
    }
    report(
        "Kfpg",
        1,
        violations,
        Some(format!(
            "|B-|={} |Bsplit|={}",
            edge_deleted_set(&b).len(),
            vertex_split_set(&b).len()
        )),
        t,
    )
}

/// Single-edge deletions of the two reduced Kuratowski graphs form exactly
/// four isomorphism classes.
fn fig7_report() -> TheoremReport {
    let t = Instant::now();
    let b: GraphSet = [catalog::k5_minus(), catalog::k33_minus()].into_iter().collect();
    let d = edge_deleted_set(&b);
    let violations = if d.len() == 4 {
        Vec::new()
    } else {
        vec![format!("expected 4 isomorphism classes, got {}", d.len())]
    };
    report("fig7", b.iter().map(|g| g.edge_count()).sum(), violations, None, t)
}

/// For each Kuratowski graph K: deleting any edge and adding any non-edge
/// of K keeps it planar, and deleting any two edges leaves a free-planar
/// graph.
fn two_edge_lemma_report() -> TheoremReport {
    let t = Instant::now();
    let mut violations = Vec::new();
    let mut instances = 0;
    for k in [catalog::complete(5), catalog::k33()] {
        let edges: Vec<(usize, usize)> = k.edges().collect();
        let non_edges: Vec<(usize, usize)> = k.non_edges().collect();
        for &(a, b) in &edges {
            let del = k.delete_edge(a, b).unwrap();
            for &(u, v) in &non_edges {
                instances += 1;
                if !is_planar_fast(&del.add_edge(u, v).unwrap()) {
                    violations.push(format!(
                        "{} -({a},{b}) +({u},{v}) nonplanar",
                        write_graph6(&k)
                    ));
                }
            }
            for &(c, d) in &edges {
                if (a, b) >= (c, d) {
                    continue;
                }
                instances += 1;
                if !fp(&del.delete_edge(c, d).unwrap()) {
                    violations.push(format!(
                        "{} -({a},{b}) -({c},{d}) not free-planar",
                        write_graph6(&k)
                    ));
                }
            }
        }
    }
    report("two-edge-lemma", instances, violations, None, t)
}

/// Random antichains: the operator's forbidden set defines the same class
/// as the free-class definition, over all graphs up to 6 vertices.
fn free_operator_report() -> TheoremReport {
    let t = Instant::now();
    let universe = enumerate_graphs_upto(6, false).expect("in range");
    let pool5 = enumerate_graphs_upto(5, false).expect("in range");
    // members with at least one edge: splitting conventions only make sense
    // for nontrivial obstructions
    let pool: Vec<&Graph> = pool5.iter().filter(|g| g.edge_count() > 0).collect();
    let mut violations = Vec::new();
    let mut instances = 0;
    // deterministic seeded LCG; 20 antichain trials
    let mut state: u64 = 0x5eed_0123_4567_89ab;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as usize
    };
    for trial in 0..20 {
        let count = 1 + next() % 3;
        let sample: GraphSet = (0..count).map(|_| *pool[next() % pool.len()]).collect();
        let b = minorkit::minor::minimal_minors(&sample);
        let f = free_forbidden(&b);
        for g in &universe {
            instances += 1;
            let lhs = excludes_all(g, &f);
            let rhs = excludes_all(g, &b)
                && g.non_edges()
                    .all(|(u, v)| excludes_all(&g.add_edge(u, v).unwrap(), &b));
            if lhs != rhs {
                violations.push(format!(
                    "trial {trial}: {} operator={} definition={}",
                    write_graph6(g),
                    lhs,
                    rhs
                ));
            }
        }
    }
    report("free-operator", instances, violations, None, t)
}

/// Certifier totality and soundness over all 2-connected graphs (capped at
/// 7 vertices) and every planarity-breaking non-edge; the fallback fraction
/// is informational.
fn certifier_report(connected: &[Graph], max_n: usize) -> TheoremReport {
    let t = Instant::now();
    let cap = max_n.min(7);
    let hosts: Vec<&Graph> = connected
        .iter()
        .filter(|g| g.n() <= cap && is_2_connected(g))
        .collect();
    let results: Vec<(usize, usize, Vec<String>)> = hosts
        .par_iter()
        .map(|g| {
            let mut instances = 0;
            let mut fallbacks = 0;
            let mut bad = Vec::new();
            for (x, y) in g.non_edges() {
                if is_planar_fast(&g.add_edge(x, y).unwrap()) {
                    continue;
                }
                instances += 1;
                match extract_certificate(g, x, y) {
                    Ok(cert) => {
                        if !cert.model.verify() {
                            bad.push(format!("{} ({x},{y}): invalid model", write_graph6(g)));
                        }
                        let target_ok = is_isomorphic(cert.model.pattern(), &cert.target.pattern());
                        if !target_ok {
                            bad.push(format!("{} ({x},{y}): wrong target", write_graph6(g)));
                        }
                        if cert.case_used == CaseUsed::Fallback {
                            fallbacks += 1;
                        }
                    }
                    Err(e) => bad.push(format!("{} ({x},{y}): {e}", write_graph6(g))),
                }
            }
            (instances, fallbacks, bad)
        })
        .collect();
    let instances: usize = results.iter().map(|(i, _, _)| i).sum();
    let fallbacks: usize = results.iter().map(|(_, f, _)| f).sum();
    let violations: Vec<String> = results.into_iter().flat_map(|(_, _, b)| b).collect();
    let notes = if instances > 0 {
        format!(
            "fallback {fallbacks}/{instances} = {:.1}%, n capped at {cap}",
            100.0 * fallbacks as f64 / instances as f64
        )
    } else {
        format!("no instances, n capped at {cap}")
    };
    report("certifier", instances, violations, Some(notes), t)
}
