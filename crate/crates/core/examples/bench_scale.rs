use std::time::Instant;
use minorkit::{catalog, connectivity, freeplanar, minor, planarity};
use rayon::prelude::*;

fn main() {
    let t = Instant::now();
    let g8 = minorkit::enumerate::enumerate_graphs_par(8, true).unwrap();
    println!("enumerate_par(8, conn) = {} in {:?}", g8.len(), t.elapsed());

    let t = Instant::now();
    let bad: usize = g8
        .par_iter()
        .filter(|g| planarity::is_planar_fast(g) != planarity::is_planar_minor(g))
        .count();
    println!("planarity cross-check n=8: {bad} disagreements in {:?}", t.elapsed());

    let t = Instant::now();
    let p3c: Vec<_> = g8
        .par_iter()
        .filter(|g| connectivity::is_properly_3_connected(g)
            && freeplanar::is_free_planar_minors(g).is_free_planar)
        .collect();
    println!("properly-3-connected FP n=8: {} classes in {:?}", p3c.len(), t.elapsed());

    // certifier totality at n=7
    let t = Instant::now();
    let g7 = minorkit::enumerate::enumerate_graphs(7, true).unwrap();
    let two_conn: Vec<_> = g7.iter().filter(|g| connectivity::is_2_connected(g)).collect();
    let mut instances = 0usize;
    let mut fallbacks = 0usize;
    for g in &two_conn {
        for (u, v) in g.non_edges() {
            let ext = g.add_edge(u, v).unwrap();
            if planarity::is_planar_fast(&ext) {
                continue;
            }
            instances += 1;
            let cert = minorkit::bridges::extract_certificate(g, u, v).unwrap();
            assert!(cert.model.verify());
            if cert.case_used == minorkit::bridges::CaseUsed::Fallback {
                fallbacks += 1;
            }
        }
    }
    println!(
        "certifier n<=7: {instances} instances, {fallbacks} fallbacks in {:?}",
        t.elapsed()
    );

    // Kratochvil operator timing
    let t = Instant::now();
    let b: minorkit::GraphSet = [catalog::complete(5), catalog::k33()].into_iter().collect();
    let f = minorkit::freeop::free_forbidden(&b);
    println!("free_forbidden(K5,K33) = {} classes in {:?}", f.len(), t.elapsed());
    let _ = minor::has_minor(&catalog::petersen(), &catalog::complete(5));
}
