//! Initial layout: one 4-cycle per tree node, glued along shared sides.
//!
//! The layout is combinatorial only. A square is stored as a cycle
//! `[c0, c1, c2, c3]`; side `i` joins `c_i` and `c_(i+1) mod 4`. A child
//! attached to side `(p, q)` becomes `[q, p, x, y]` with fresh `x`, `y`, so
//! its own side 0 faces the parent and side 2 lies opposite.

use std::collections::{BTreeSet, VecDeque};

use rand::Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::params::{self, ParamError};
use crate::tree::{self, TreeGraph, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LayoutError {
    #[error("tree node {node} has degree {degree}, more than a square has sides")]
    DegreeBound { node: usize, degree: usize },
    #[error("cannot trim {have} vertices down to {want}")]
    TrimTarget { have: usize, want: usize },
    #[error("no removable vertex of degree at most two with {remaining} vertices left")]
    Stuck { remaining: usize },
    #[error(transparent)]
    Params(#[from] ParamError),
}

/// The squares layout of a tree, possibly trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutResult {
    pub graph: Graph,
    /// Edge count of `graph`.
    pub m_prime: usize,
    /// Cycle of each tree node, in pre-trim vertex ids.
    pub square_of_node: Vec<[usize; 4]>,
    /// Tree nodes with at most one neighbor, ascending.
    pub leaf_nodes: Vec<usize>,
    /// Deleted pre-trim ids, in deletion order.
    pub trimmed: Vec<usize>,
    /// Pre-trim id of every current vertex.
    pub kept: Vec<usize>,
}

impl LayoutResult {
    /// Current id of a pre-trim vertex, if it survived trimming.
    pub fn current_id(&self, original: usize) -> Option<usize> {
        self.kept.binary_search(&original).ok()
    }
}

// Root sides: opposite pairs first so two-child roots lay out straight.
const ROOT_SIDES: [usize; 4] = [0, 2, 1, 3];
// Non-root sides: side 0 faces the parent, opposite side first.
const CHILD_SIDES: [usize; 3] = [2, 1, 3];

/// Builds the untrimmed layout: `2k + 2` vertices and `3k + 1` edges.
pub fn layout_from_tree(t: &TreeGraph) -> Result<LayoutResult, LayoutError> {
    let tg = t.graph();
    let k = tg.vertex_count();
    if let Some(node) = tg.vertices().find(|&v| tg.degree(v) > MAX_DEGREE) {
        return Err(LayoutError::DegreeBound {
            node,
            degree: tg.degree(node),
        });
    }
    let mut g = Graph::new(2 * k + 2);
    let mut squares = vec![[usize::MAX; 4]; k];
    squares[0] = [0, 1, 2, 3];
    for i in 0..4 {
        g.insert_unchecked(i, (i + 1) % 4);
    }
    let mut next = 4;
    let mut parent = vec![usize::MAX; k];
    let mut queue = VecDeque::from([0usize]);
    let mut seen = vec![false; k];
    seen[0] = true;
    while let Some(node) = queue.pop_front() {
        let sides: &[usize] = if node == 0 { &ROOT_SIDES } else { &CHILD_SIDES };
        let children: Vec<usize> = tg
            .adj(node)
            .iter()
            .copied()
            .filter(|&c| c != parent[node])
            .collect();
        for (&child, &side) in children.iter().zip(sides) {
            let sq = squares[node];
            let (p, q) = (sq[side], sq[(side + 1) % 4]);
            let (x, y) = (next, next + 1);
            next += 2;
            g.insert_unchecked(p, x);
            g.insert_unchecked(x, y);
            g.insert_unchecked(y, q);
            squares[child] = [q, p, x, y];
            parent[child] = node;
            seen[child] = true;
            queue.push_back(child);
        }
    }
    debug_assert!(seen.iter().all(|&s| s), "tree is connected");
    let leaf_nodes = tg.vertices().filter(|&v| tg.degree(v) <= 1).collect();
    Ok(LayoutResult {
        m_prime: g.edge_count(),
        kept: g.vertices().collect(),
        graph: g,
        square_of_node: squares,
        leaf_nodes,
        trimmed: Vec::new(),
    })
}

/// Deletes degree-≤2 vertices one at a time, keeping the graph connected,
/// until `n` remain. Vertices of leaf squares are tried first.
pub fn trim_to_n(layout: LayoutResult, n: usize) -> Result<LayoutResult, LayoutError> {
    let have = layout.graph.vertex_count();
    if n == 0 || n > have {
        return Err(LayoutError::TrimTarget { have, want: n });
    }
    if n == have {
        return Ok(layout);
    }
    let mut order: Vec<usize> = Vec::new();
    for &leaf in &layout.leaf_nodes {
        let sq = layout.square_of_node[leaf];
        order.extend([sq[2], sq[3], sq[0], sq[1]].map(|v| layout.kept[v]));
    }
    order.extend(layout.kept.iter().copied());
    let current_of = |orig: usize| layout.current_id(orig);

    let mut g = layout.graph.clone();
    let mut alive = vec![true; have];
    let mut remaining = have;
    let mut trimmed = layout.trimmed.clone();
    while remaining > n {
        let pick = order
            .iter()
            .filter_map(|&orig| current_of(orig))
            .find(|&v| alive[v] && g.degree(v) <= 2 && stays_connected(&g, &alive, v, remaining));
        let Some(v) = pick else {
            return Err(LayoutError::Stuck { remaining });
        };
        for w in g.adj(v).clone() {
            g.remove_edge(v, w).expect("incident edge");
        }
        alive[v] = false;
        remaining -= 1;
        trimmed.push(layout.kept[v]);
    }
    let survivors: BTreeSet<usize> = (0..have).filter(|&v| alive[v]).collect();
    let (graph, map) = g.induced(&survivors).expect("survivors are in range");
    let kept = map.kept().iter().map(|&v| layout.kept[v]).collect();
    Ok(LayoutResult {
        m_prime: graph.edge_count(),
        graph,
        square_of_node: layout.square_of_node,
        leaf_nodes: layout.leaf_nodes,
        trimmed,
        kept,
    })
}

fn stays_connected(g: &Graph, alive: &[bool], v: usize, remaining: usize) -> bool {
    if remaining <= 1 {
        return false;
    }
    let Some(start) = (0..alive.len()).find(|&s| alive[s] && s != v) else {
        return false;
    };
    let dist = g.bfs_masked(start, |w| alive[w] && w != v);
    let reached = dist.iter().filter(|d| d.is_some()).count();
    reached == remaining - 1
}

/// Tree on `⌈n/2⌉` nodes, its layout, and trimming to `n` vertices.
///
/// The flag is set when the layout already has at least `m` edges, in which
/// case generation stops and the layout itself is the output.
pub fn build_initial_layout<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    rng: &mut R,
) -> Result<(LayoutResult, bool), LayoutError> {
    build_initial_layout_with(n, m, tree::DEFAULT_SPLIT_PROBABILITY, rng)
}

pub fn build_initial_layout_with<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    split_probability: f64,
    rng: &mut R,
) -> Result<(LayoutResult, bool), LayoutError> {
    params::validate(n, m)?;
    let t = tree::grow_tree_with(n.div_ceil(2), split_probability, rng);
    let layout = trim_to_n(layout_from_tree(&t)?, n)?;
    let early = layout.m_prime >= m;
    Ok((layout, early))
}
