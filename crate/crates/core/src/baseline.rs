//! Reference generator: start from a uniform random labeled tree and keep
//! joining two-pairs. A two-pair's edge never changes weak chordality, and
//! every weakly chordal graph short of a clique has one, so this always
//! reaches `m` edges.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::time::Instant;

use rand::Rng;

use crate::graph::Graph;
use crate::inserter::{EventKind, GenError, GenTrace, Timings, TraceEvent};
use crate::oracle::{check_weakly_chordal, is_two_pair};
use crate::params::{rng_from_seed, GenParams};

/// A uniformly random two-pair of `g`, or `None` if there is none.
///
/// Naive scan: candidates are the non-adjacent pairs with a common neighbor
/// (a connected pair without one has a chordless path longer than two),
/// visited in a lazily shuffled order and tested one by one.
pub fn find_random_two_pair<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Option<(usize, usize)> {
    let mut candidates: Vec<(usize, usize)> = distance_two_pairs(g).into_iter().collect();
    let len = candidates.len();
    for i in 0..len {
        let j = rng.gen_range(i..len);
        candidates.swap(i, j);
        let (u, v) = candidates[i];
        if is_two_pair(g, u, v).expect("candidate pairs are valid") {
            return Some((u, v));
        }
    }
    None
}

fn distance_two_pairs(g: &Graph) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for w in g.vertices() {
        let nw: Vec<usize> = g.adj(w).iter().copied().collect();
        for (i, &a) in nw.iter().enumerate() {
            for &b in &nw[i + 1..] {
                if !g.has_edge(a, b) {
                    out.insert((a, b));
                }
            }
        }
    }
    out
}

/// Uniform random labeled tree on `n` vertices via Prüfer sequence decoding.
pub fn random_labeled_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    if n == 2 {
        g.insert_unchecked(0, 1);
        return g;
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    decode_prufer(n, &code, &mut g);
    g
}

fn decode_prufer(n: usize, code: &[usize], g: &mut Graph) {
    let mut remaining = vec![1usize; n];
    for &c in code {
        remaining[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        g.insert_unchecked(leaf, c);
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    g.insert_unchecked(a, b);
}

/// Two-pair generation from `params.seed`.
pub fn generate_two_pair_method(params: &GenParams) -> Result<(Graph, GenTrace), GenError> {
    let mut timings = Timings::default();
    generate_two_pair_timed(params, &mut timings)
}

pub fn generate_two_pair_timed(
    params: &GenParams,
    timings: &mut Timings,
) -> Result<(Graph, GenTrace), GenError> {
    params.validate()?;
    let mut rng = rng_from_seed(params.seed);
    let mut trace = GenTrace::new(*params);

    let started = Instant::now();
    let mut g = random_labeled_tree(params.n, &mut rng);
    timings.initial = started.elapsed();
    trace.initial_edges = g.edge_count();

    let started = Instant::now();
    while g.edge_count() < params.m {
        trace.attempts += 1;
        let t0 = Instant::now();
        let pair = find_random_two_pair(&g, &mut rng);
        timings.query_nanos.push(t0.elapsed().as_nanos() as u64);
        let (u, v) = pair.ok_or(GenError::NoTwoPair {
            edges: g.edge_count(),
        })?;
        let t1 = Instant::now();
        g.insert_unchecked(u, v);
        timings.mutation_nanos.push(t1.elapsed().as_nanos() as u64);
        trace.fallback_two_pair_insertions += 1;
        trace.events.push(TraceEvent {
            u,
            v,
            kind: EventKind::TwoPair,
        });
    }
    timings.insertion = started.elapsed();
    if params.gate.enabled_for(params.n) {
        check_weakly_chordal(&g).map_err(GenError::Invariant)?;
    }
    Ok((g, trace))
}
