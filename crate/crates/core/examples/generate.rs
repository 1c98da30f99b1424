//! Generate a graph from the command line and print it with its trace
//! summary.
//!
//! cargo run --example generate -- 30 70 5

use wcgen::{generate_graph, io, GenParams, Outcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: u64| args.get(i).map_or(Ok(default), |s| s.parse());
    let (n, m, seed) = (arg(0, 16)? as usize, arg(1, 32)? as usize, arg(2, 1)?);

    let (g, trace) = generate_graph(&GenParams::new(n, m, seed))?;
    print!("{}", io::serialize_edgelist(&g));

    eprintln!("initial layout edges: {}", trace.initial_edges);
    eprintln!("insertion queries: {}", trace.attempts);
    for outcome in Outcome::ALL {
        eprintln!("  {:<22} {}", outcome.name(), trace.count(outcome));
    }
    eprintln!("two-pair fallbacks: {}", trace.fallback_two_pair_insertions);
    eprintln!("weakly chordal: {}", wcgen::is_weakly_chordal(&g));
    Ok(())
}
