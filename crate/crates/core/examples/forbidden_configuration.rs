//! Every cross-edge pattern between two parallel paths u-a-b-v and u-c-d-v.

use wcgen::fixtures::{self, gadget};
use wcgen::inserter::decide;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("a-c b-d a-d b-c | before | after | verdict");
    for mask in 0u8..16 {
        let g = fixtures::two_p3_gadget(mask);
        let mut joined = g.clone();
        joined.add_edge(gadget::U, gadget::V)?;
        let verdict = decide(&g, gadget::U, gadget::V)?;
        let bit = |i: u8| if mask >> i & 1 == 1 { " x " } else { " . " };
        println!(
            "{} {} {} {} | {:6} | {:5} | {:?}",
            bit(0),
            bit(1),
            bit(2),
            bit(3),
            wcgen::is_weakly_chordal(&g),
            wcgen::is_weakly_chordal(&joined),
            verdict.outcome,
        );
    }
    Ok(())
}
