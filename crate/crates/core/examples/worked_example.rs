//! Two insertions into the three-square layout on eight vertices.

use wcgen::fixtures;
use wcgen::inserter::{compute_scope, scoped_shortest_paths, try_insert};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut g = fixtures::f1();
    println!(
        "start: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );

    let first = try_insert(&mut g, 3, 4, true)?;
    println!("(3, 4): {:?} via case {}", first.outcome, first.case_label);

    let scope = compute_scope(&g, 3, 6)?;
    println!("common neighbors of 3 and 6: {:?}", scope.common);
    println!("search pool: {:?}", scope.aux_nodes);
    println!("shortest paths: {:?}", scoped_shortest_paths(&scope).paths);

    let second = try_insert(&mut g, 3, 6, true)?;
    println!(
        "(3, 6): {:?} via case {}",
        second.outcome, second.case_label
    );

    println!(
        "end: {} edges, weakly chordal = {}",
        g.edge_count(),
        wcgen::is_weakly_chordal(&g)
    );
    Ok(())
}
