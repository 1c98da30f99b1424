//! Grow a random tree into a dense graph by joining two-pairs.

use wcgen::baseline::{find_random_two_pair, random_labeled_tree};
use wcgen::oracle::is_two_pair;
use wcgen::params::rng_from_seed;

fn main() {
    let mut rng = rng_from_seed(11);
    let mut g = random_labeled_tree(10, &mut rng);
    println!("tree: {:?}", g.edges().collect::<Vec<_>>());

    while let Some((u, v)) = find_random_two_pair(&g, &mut rng) {
        assert!(is_two_pair(&g, u, v).unwrap());
        g.add_edge(u, v).unwrap();
        println!(
            "join {u}-{v}: {} edges, weakly chordal = {}",
            g.edge_count(),
            wcgen::is_weakly_chordal(&g)
        );
    }
    println!("complete: {}", g.is_complete());
}
