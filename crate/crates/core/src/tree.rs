//! Random trees with maximum degree four and no two adjacent degree-4 nodes.

use rand::Rng;

use crate::graph::Graph;

/// Largest degree a tree node may have; a square has four sides.
pub const MAX_DEGREE: usize = 4;

/// Default probability of splitting an edge (versus attaching a leaf).
pub const DEFAULT_SPLIT_PROBABILITY: f64 = 0.5;

/// A tree whose nodes each become one square of the initial layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeGraph {
    graph: Graph,
}

impl TreeGraph {
    /// Wraps an existing tree. Returns `None` if `graph` is not a tree with
    /// maximum degree four.
    pub fn from_graph(graph: Graph) -> Option<Self> {
        let n = graph.vertex_count();
        let is_tree = n >= 1 && graph.edge_count() == n - 1 && graph.is_connected();
        let bounded = graph.vertices().all(|v| graph.degree(v) <= MAX_DEGREE);
        (is_tree && bounded).then_some(TreeGraph { graph })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn node_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Edges joining two degree-4 nodes.
    pub fn saturated_edges(&self) -> Vec<(usize, usize)> {
        let g = &self.graph;
        g.edges()
            .filter(|&(a, b)| g.degree(a) == MAX_DEGREE && g.degree(b) == MAX_DEGREE)
            .collect()
    }

    /// Every tree invariant: connected, `k - 1` edges, degree ≤ 4, and no
    /// adjacent degree-4 pair.
    pub fn satisfies_invariants(&self) -> bool {
        let g = &self.graph;
        let k = g.vertex_count();
        k >= 1
            && g.edge_count() == k - 1
            && g.is_connected()
            && g.vertices().all(|v| g.degree(v) <= MAX_DEGREE)
            && self.saturated_edges().is_empty()
    }
}

/// Grows a tree to `k_target` nodes by random edge splits and leaf
/// attachments, then separates adjacent degree-4 nodes.
pub fn grow_tree<R: Rng + ?Sized>(k_target: usize, rng: &mut R) -> TreeGraph {
    grow_tree_with(k_target, DEFAULT_SPLIT_PROBABILITY, rng)
}

/// [`grow_tree`] with an explicit split probability.
pub fn grow_tree_with<R: Rng + ?Sized>(
    k_target: usize,
    split_probability: f64,
    rng: &mut R,
) -> TreeGraph {
    let k_target = k_target.max(1);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(k_target);
    let mut degree = vec![0usize; 1];
    while degree.len() < k_target {
        let fresh = degree.len();
        degree.push(0);
        if !edges.is_empty() && rng.gen_bool(split_probability) {
            // u -- w becomes u -- fresh -- w; u and w keep their degrees
            let i = rng.gen_range(0..edges.len());
            let (u, w) = edges[i];
            edges[i] = (u, fresh);
            edges.push((fresh, w));
            degree[fresh] = 2;
        } else {
            let open: Vec<usize> = (0..fresh).filter(|&v| degree[v] < MAX_DEGREE).collect();
            let host = open[rng.gen_range(0..open.len())];
            edges.push((host, fresh));
            degree[host] += 1;
            degree[fresh] = 1;
        }
    }
    let graph = Graph::from_edges(degree.len(), &edges).expect("grown edges are valid");
    separate_adjacent_degree4(TreeGraph { graph })
}

/// Subdivides every edge whose endpoints both have degree four.
pub fn separate_adjacent_degree4(t: TreeGraph) -> TreeGraph {
    let saturated = t.saturated_edges();
    if saturated.is_empty() {
        return t;
    }
    let old = t.into_graph();
    let mut g = Graph::new(old.vertex_count() + saturated.len());
    for (a, b) in old.edges() {
        g.insert_unchecked(a, b);
    }
    for (i, &(a, b)) in saturated.iter().enumerate() {
        let x = old.vertex_count() + i;
        g.remove_edge(a, b).expect("saturated edge exists");
        g.insert_unchecked(a, x);
        g.insert_unchecked(x, b);
    }
    TreeGraph { graph: g }
}
