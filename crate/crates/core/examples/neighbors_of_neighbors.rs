//! A pair whose only blocking paths pass through vertices two steps away
//! from the common neighbor.

use wcgen::fixtures::{self, f4v};
use wcgen::inserter::{compute_scope, decide};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::f4();
    let names = ["u", "v", "a", "b", "c", "d", "e"];
    let name =
        |xs: &mut dyn Iterator<Item = usize>| xs.map(|x| names[x]).collect::<Vec<_>>().join(" ");

    let scope = compute_scope(&g, f4v::U, f4v::V)?;
    println!("I = {{{}}}", name(&mut scope.common.iter().copied()));
    println!(
        "AuxNodes = {{{}}}",
        name(&mut scope.aux_nodes.iter().copied())
    );

    let verdict = decide(&g, f4v::U, f4v::V)?;
    println!(
        "verdict: {:?} (case {})",
        verdict.outcome, verdict.case_label
    );
    if let Some(wcgen::Witness::Path(p)) = &verdict.witness {
        println!("blocking path: {}", name(&mut p.iter().copied()));
    }

    let mut joined = g.clone();
    joined.add_edge(f4v::U, f4v::V)?;
    if let Err(hole) = wcgen::check_weakly_chordal(&joined) {
        println!("joining u and v would create: {hole}");
    }
    Ok(())
}
