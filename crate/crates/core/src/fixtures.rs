//! Small named graphs used by tests, examples, and the acceptance suite.

use crate::graph::Graph;

/// Three squares in a row: (0,3,5,4), (4,5,6,7), (1,2,6,7).
pub fn f1() -> Graph {
    Graph::from_edges(
        8,
        &[
            (0, 3),
            (0, 4),
            (3, 5),
            (4, 5),
            (4, 7),
            (5, 6),
            (6, 7),
            (2, 6),
            (1, 2),
            (1, 7),
        ],
    )
    .expect("static fixture")
}

/// Vertex names for [`f4`].
pub mod f4v {
    pub const U: usize = 0;
    pub const V: usize = 1;
    pub const A: usize = 2;
    pub const B: usize = 3;
    pub const C: usize = 4;
    pub const D: usize = 5;
    pub const E: usize = 6;
}

/// A single common neighbor `a` of `u` and `v` hides the longer connections
/// `u-c-d-e-v` and `u-c-d-b-v`, reachable only through neighbors of
/// neighbors of `a`.
pub fn f4() -> Graph {
    use f4v::*;
    Graph::from_edges(
        7,
        &[
            (U, A),
            (A, V),
            (A, B),
            (A, D),
            (B, V),
            (B, D),
            (U, C),
            (C, D),
            (D, E),
            (E, V),
        ],
    )
    .expect("static fixture")
}

/// Vertex names for the two-P3 gadget family ([`f2`], [`f3`], [`two_p3_gadget`]).
pub mod gadget {
    pub const U: usize = 0;
    pub const A: usize = 1;
    pub const B: usize = 2;
    pub const V: usize = 3;
    pub const D: usize = 4;
    pub const C: usize = 5;

    /// The four possible internal cross edges, in bit order of the subset mask.
    pub const CROSS: [(usize, usize); 4] = [(A, C), (B, D), (A, D), (B, C)];
}

/// Two internally disjoint P3s `u-a-b-v` and `u-c-d-v` plus the cross edges
/// selected by the low four bits of `mask` (see [`gadget::CROSS`]).
pub fn two_p3_gadget(mask: u8) -> Graph {
    use gadget::*;
    let mut g = Graph::from_edges(6, &[(U, A), (A, B), (B, V), (U, C), (C, D), (D, V)])
        .expect("static fixture");
    for (bit, &(x, y)) in CROSS.iter().enumerate() {
        if mask & (1 << bit) != 0 {
            g.add_edge(x, y).expect("static fixture");
        }
    }
    g
}

/// Parallel cross edges only: inserting `(u, v)` yields the prism, whose
/// complement is a 6-hole.
pub fn f2() -> Graph {
    two_p3_gadget(0b0011)
}

/// Alternate cross edges only: inserting `(u, v)` is safe.
pub fn f3() -> Graph {
    two_p3_gadget(0b1100)
}

/// Vertex names for [`single_p3_with_detour`].
pub mod detour {
    pub const U: usize = 0;
    pub const V: usize = 1;
    pub const X: usize = 2;
    pub const Y: usize = 3;
    pub const C: usize = 4;
    pub const D: usize = 5;
    pub const E: usize = 6;
}

/// One shortest path `u-x-y-v` plus the chordless detour `u-c-d-e-v`, with
/// `d` adjacent to both internals so the detour is found among neighbors of
/// neighbors of the shortest path.
pub fn single_p3_with_detour() -> Graph {
    use detour::*;
    Graph::from_edges(
        7,
        &[
            (U, X),
            (X, Y),
            (Y, V),
            (U, C),
            (C, D),
            (D, E),
            (E, V),
            (X, D),
            (Y, D),
        ],
    )
    .expect("static fixture")
}
