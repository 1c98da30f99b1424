//! Census of length-3 chordless paths between a non-adjacent pair.

use wcgen::oracle::count_p3_stats;
use wcgen::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // u = 0 sees c1, c2; v = 5 sees b1, b2; every c is joined to every b
    let g = Graph::from_edges(
        6,
        &[
            (0, 1),
            (0, 2),
            (3, 5),
            (4, 5),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
        ],
    )?;
    let stats = count_p3_stats(&g, 0, 5)?;
    for p in &stats.paths {
        println!("{p:?}");
    }
    println!(
        "paths: {} (bound l * k_att = {})",
        stats.path_count,
        stats.l * stats.k_att
    );
    println!("internally disjoint pairs: {}", stats.disjoint_pair_count);
    println!(
        "ordered pairs through different v-side vertices: {}",
        stats.cross_pair_count()
    );
    Ok(())
}
