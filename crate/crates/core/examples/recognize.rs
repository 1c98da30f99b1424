//! Check a graph file, or a few built-in graphs when no path is given.

use std::path::Path;

use wcgen::{check_weakly_chordal, io, Graph};

fn report(name: &str, g: &Graph) {
    match check_weakly_chordal(g) {
        Ok(()) => println!("{name}: weakly chordal"),
        Err(hole) => println!("{name}: {hole}"),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        let g = io::read_graph(Path::new(&path), None)?;
        report(&path, &g);
        return Ok(());
    }
    report("C5", &Graph::cycle(5));
    report("C6", &Graph::cycle(6));
    report("complement of C6", &Graph::cycle(6).complement());
    report("complement of C7", &Graph::cycle(7).complement());
    report("P7", &Graph::path(7));
    report("K5", &Graph::complete(5));
    Ok(())
}
