//! Random weakly chordal graph generation.
//!
//! Two generators are provided. The separator method grows a degree-bounded
//! tree, lays it out as edge-sharing 4-cycles, and then inserts random edges
//! whose safety is decided by a local path search around the pair's common
//! neighborhood. The two-pair method starts from a random labeled tree and
//! repeatedly joins two-pairs. Both are seeded and deterministic.
//!
//! ```
//! use wcgen::{generate_graph, oracle, GenParams};
//!
//! let (g, trace) = generate_graph(&GenParams::new(8, 12, 42)).unwrap();
//! assert_eq!(g.edge_count(), 12);
//! assert!(oracle::is_weakly_chordal(&g));
//! assert!(!trace.early_return);
//! ```

pub mod baseline;
pub mod bench;
pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod inserter;
pub mod io;
pub mod layout;
pub mod oracle;
pub mod params;
pub mod tree;

pub use graph::{Graph, GraphError, PathSet, VertexMap};
pub use inserter::{try_insert, CaseLabel, GenError, GenTrace, Outcome, Timings, Verdict, Witness};
pub use oracle::{check_weakly_chordal, find_hole, is_weakly_chordal, HoleWitness, Side};
pub use params::{GateMode, GenParams, Method};

/// Runs the generator selected by `params.method`.
pub fn generate_graph(params: &GenParams) -> Result<(Graph, GenTrace), GenError> {
    generate_graph_timed(params, &mut Timings::default())
}

pub fn generate_graph_timed(
    params: &GenParams,
    timings: &mut Timings,
) -> Result<(Graph, GenTrace), GenError> {
    match params.method {
        Method::Separator => inserter::generate_timed(params, timings),
        Method::TwoPair => baseline::generate_two_pair_timed(params, timings),
    }
}
