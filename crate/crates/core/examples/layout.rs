//! Grow a degree-bounded tree, lay it out as squares, and trim it.

use wcgen::layout::{layout_from_tree, trim_to_n};
use wcgen::params::rng_from_seed;
use wcgen::tree::grow_tree;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = rng_from_seed(2);
    let tree = grow_tree(6, &mut rng);
    let k = tree.node_count();
    println!(
        "tree on {k} nodes: {:?}",
        tree.graph().edges().collect::<Vec<_>>()
    );

    let layout = layout_from_tree(&tree)?;
    println!(
        "layout: {} vertices (2k+2 = {}), {} edges (3k+1 = {})",
        layout.graph.vertex_count(),
        2 * k + 2,
        layout.m_prime,
        3 * k + 1
    );
    for (node, square) in layout.square_of_node.iter().enumerate() {
        println!("  node {node}: square {square:?}");
    }

    let trimmed = trim_to_n(layout, 11)?;
    println!(
        "trimmed to 11: removed {:?}, {} edges left",
        trimmed.trimmed, trimmed.m_prime
    );
    println!(
        "weakly chordal: {}",
        wcgen::is_weakly_chordal(&trimmed.graph)
    );
    Ok(())
}
