//! Undirected simple graphs over dense vertex ids and the primitive queries
//! the generators and the recognizer are built on.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

/// Errors raised by graph primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is excluded from the search")]
    Excluded(usize),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) is already in the graph")]
    EdgePresent(usize, usize),
}

/// Result of an edge mutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeChange {
    Added,
    AlreadyPresent,
    Removed,
    Absent,
}

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency sets are ordered so every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// Cycle `C_n` with edges `i -- i+1 (mod n)`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j {
                g.insert_unchecked(i, j);
            }
        }
        g
    }

    /// Path on `n` vertices with edges `i -- i+1`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.insert_unchecked(i - 1, i);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adjacency.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.adjacency.len() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.adjacency.len(),
            })
        }
    }

    pub(crate) fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        if self.adjacency[u].insert(v) {
            self.adjacency[v].insert(u);
            self.edge_count += 1;
            true
        } else {
            false
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeChange, GraphError> {
        self.check_pair(u, v)?;
        Ok(if self.insert_unchecked(u, v) {
            EdgeChange::Added
        } else {
            EdgeChange::AlreadyPresent
        })
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<EdgeChange, GraphError> {
        self.check_pair(u, v)?;
        if self.adjacency[u].remove(&v) {
            self.adjacency[v].remove(&u);
            self.edge_count -= 1;
            Ok(EdgeChange::Removed)
        } else {
            Ok(EdgeChange::Absent)
        }
    }

    /// Adjacency test; out-of-range ids are simply not adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Open neighborhood `N(v)` as a borrowed ordered set.
    pub fn adj(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<BTreeSet<usize>, GraphError> {
        self.check(v)?;
        Ok(self.adjacency[v].clone())
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> Result<BTreeSet<usize>, GraphError> {
        let mut s = self.neighbors(v)?;
        s.insert(v);
        Ok(s)
    }

    /// Union of the open neighborhoods of every vertex in `set`.
    pub fn neighbors_of_set<'a, I>(&self, set: I) -> BTreeSet<usize>
    where
        I: IntoIterator<Item = &'a usize>,
    {
        let mut out = BTreeSet::new();
        for &x in set {
            out.extend(self.adjacency[x].iter().copied());
        }
        out
    }

    /// `N(u) ∩ N(v)`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<BTreeSet<usize>, GraphError> {
        self.check_pair(u, v)?;
        Ok(self.adjacency[u]
            .intersection(&self.adjacency[v])
            .copied()
            .collect())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |v| !self.adjacency[u].contains(v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `set`, together with the id translation.
    pub fn induced(&self, set: &BTreeSet<usize>) -> Result<(Graph, VertexMap), GraphError> {
        for &v in set {
            self.check(v)?;
        }
        let map = VertexMap::new(self.vertex_count(), set.iter().copied());
        let mut h = Graph::new(map.len());
        for (new_u, &old_u) in map.to_old.iter().enumerate() {
            for &old_v in self.adjacency[old_u].range(old_u + 1..) {
                if let Some(new_v) = map.to_new[old_v] {
                    h.insert_unchecked(new_u, new_v);
                }
            }
        }
        Ok((h, map))
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut h = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacency[u].contains(&v) {
                    h.insert_unchecked(u, v);
                }
            }
        }
        h
    }

    /// Whether `u` reaches `v` while avoiding every vertex of `excluded`.
    pub fn reachable(
        &self,
        u: usize,
        v: usize,
        excluded: &BTreeSet<usize>,
    ) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        for &x in [u, v].iter() {
            if excluded.contains(&x) {
                return Err(GraphError::Excluded(x));
            }
        }
        let mut blocked = vec![false; self.vertex_count()];
        for &x in excluded {
            if x < blocked.len() {
                blocked[x] = true;
            }
        }
        Ok(self.bfs_masked(u, |w| !blocked[w])[v].is_some())
    }

    /// Breadth-first distances from `source` over vertices accepted by `allowed`.
    pub(crate) fn bfs_masked(
        &self,
        source: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in &self.adjacency[x] {
                if dist[y].is_none() && allowed(y) {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// One shortest `u`–`v` path over allowed vertices, smallest ids first.
    pub(crate) fn shortest_path_masked(
        &self,
        u: usize,
        v: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        let dist = self.bfs_masked(v, &allowed);
        let mut cur = u;
        let mut d = dist[u]?;
        let mut path = vec![u];
        while d > 0 {
            cur = *self.adjacency[cur]
                .iter()
                .find(|&&w| dist[w] == Some(d - 1) && (w == v || allowed(w)))?;
            path.push(cur);
            d -= 1;
        }
        Some(path)
    }

    /// Every shortest `u`–`v` path, in lexicographic order.
    pub fn all_shortest_paths(&self, u: usize, v: usize) -> Result<PathSet, GraphError> {
        self.all_shortest_paths_capped(u, v, None)
    }

    /// Like [`Graph::all_shortest_paths`], stopping after `cap` paths.
    ///
    /// Paths are read off the predecessor DAG of a breadth-first search
    /// rooted at `v`, walking forward from `u`.
    pub fn all_shortest_paths_capped(
        &self,
        u: usize,
        v: usize,
        cap: Option<usize>,
    ) -> Result<PathSet, GraphError> {
        self.check_pair(u, v)?;
        let dist = self.bfs_masked(v, |_| true);
        let mut set = PathSet {
            endpoints: (u, v),
            paths: Vec::new(),
            length: 0,
            truncated: false,
        };
        let Some(len) = dist[u] else {
            return Ok(set);
        };
        set.length = len;
        let cap = cap.unwrap_or(usize::MAX);
        let mut stack = vec![u];
        self.walk_dag(&dist, &mut stack, cap, &mut set);
        Ok(set)
    }

    fn walk_dag(
        &self,
        dist: &[Option<usize>],
        stack: &mut Vec<usize>,
        cap: usize,
        out: &mut PathSet,
    ) {
        let cur = *stack.last().expect("non-empty walk");
        let d = dist[cur].expect("walk stays on reached vertices");
        if d == 0 {
            if out.paths.len() == cap {
                out.truncated = true;
            } else {
                out.paths.push(stack.clone());
            }
            return;
        }
        for &w in &self.adjacency[cur] {
            if out.truncated {
                return;
            }
            if dist[w] == Some(d - 1) {
                stack.push(w);
                self.walk_dag(dist, stack, cap, out);
                stack.pop();
            }
        }
    }

    /// True iff `path` has no edge between non-consecutive vertices.
    pub fn is_chordless_path(&self, path: &[usize]) -> Result<bool, GraphError> {
        for &x in path {
            self.check(x)?;
        }
        for w in path.windows(2) {
            if !self.has_edge(w[0], w[1]) {
                return Err(GraphError::InvalidPath(format!(
                    "{} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        let mut seen = BTreeSet::new();
        if !path.iter().all(|x| seen.insert(*x)) {
            return Err(GraphError::InvalidPath("repeated vertex".into()));
        }
        for i in 0..path.len() {
            for j in i + 2..path.len() {
                if self.has_edge(path[i], path[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Partition of the vertex set into connected components, each sorted,
    /// ordered by smallest member.
    pub fn connected_components(&self) -> Vec<BTreeSet<usize>> {
        let mut label = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if label[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            label[s] = id;
            while let Some(x) = queue.pop_front() {
                comp.insert(x);
                for &y in &self.adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = id;
                        queue.push_back(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs_masked(0, |_| true).iter().all(Option::is_some)
    }

    /// Removes the vertices of `set` and renumbers the rest densely.
    pub fn without(&self, set: &BTreeSet<usize>) -> (Graph, VertexMap) {
        let keep: BTreeSet<usize> = self.vertices().filter(|v| !set.contains(v)).collect();
        self.induced(&keep).expect("kept vertices are in range")
    }
}

/// Translation between the ids of a graph and those of a derived subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexMap {
    to_new: Vec<Option<usize>>,
    to_old: Vec<usize>,
}

impl VertexMap {
    fn new(n: usize, kept: impl Iterator<Item = usize>) -> Self {
        let mut to_new = vec![None; n];
        let mut to_old = Vec::new();
        for old in kept {
            to_new[old] = Some(to_old.len());
            to_old.push(old);
        }
        VertexMap { to_new, to_old }
    }

    pub fn len(&self) -> usize {
        self.to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_old.is_empty()
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.to_old[new]
    }

    /// Kept original ids, indexed by new id.
    pub fn kept(&self) -> &[usize] {
        &self.to_old
    }

    pub fn path_to_old(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&x| self.to_old[x]).collect()
    }
}

/// All shortest paths between two endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSet {
    pub endpoints: (usize, usize),
    pub paths: Vec<Vec<usize>>,
    /// Edge count shared by every path; 0 when the endpoints are disconnected.
    pub length: usize,
    /// Set when a cap stopped the enumeration early.
    pub truncated: bool,
}

impl PathSet {
    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    /// Internal vertices of all paths, deduplicated.
    pub fn internals(&self) -> BTreeSet<usize> {
        self.paths
            .iter()
            .flat_map(|p| p[1..p.len() - 1].iter().copied())
            .collect()
    }

    /// Every vertex on any path, endpoints included.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.paths.iter().flatten().copied().collect()
    }
}
