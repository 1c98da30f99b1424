//! Ground-truth recognition of weakly chordal graphs.
//!
//! A hole is a chordless cycle on at least five vertices. A graph is weakly
//! chordal when neither it nor its complement has a hole. Every hole contains
//! an induced P4 `w-x-y-z`, and the rest of the hole is a `z`–`w` path whose
//! interior avoids `N[x] ∪ N[y]`; conversely a shortest such connector always
//! closes a hole. [`find_hole`] searches exactly that space.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// Which graph a hole lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Graph,
    Complement,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Graph => f.write_str("graph"),
            Side::Complement => f.write_str("complement"),
        }
    }
}

/// A chordless cycle of length at least five.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoleWitness {
    pub cycle: Vec<usize>,
    pub side: Side,
}

impl HoleWitness {
    /// Re-checks the witness against `g` (the original graph, whichever side
    /// the hole is on).
    pub fn verify(&self, g: &Graph) -> bool {
        let adjacent = |a: usize, b: usize| match self.side {
            Side::Graph => g.has_edge(a, b),
            Side::Complement => a != b && !g.has_edge(a, b),
        };
        let c = &self.cycle;
        let k = c.len();
        if k < 5 || c.iter().any(|&x| x >= g.vertex_count()) {
            return false;
        }
        if c.iter().collect::<BTreeSet<_>>().len() != k {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                adjacent(c[i], c[j]) == consecutive
            })
        })
    }
}

impl fmt::Display for HoleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-side hole of length {}:", self.side, self.cycle.len())?;
        for v in &self.cycle {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Finds a chordless cycle of length ≥ 5 in `g`, if any.
pub fn find_hole(g: &Graph) -> Option<HoleWitness> {
    let mut scratch = Scratch::new(g.vertex_count());
    for (x, y) in g.edges() {
        if let Some(path) = anchored_long_path(g, x, y, |_| true, &mut scratch) {
            // path is x, w, ..., z, y; the edge y-x closes it
            let mut cycle = vec![x];
            cycle.extend(path[1..].iter().rev());
            return Some(HoleWitness {
                cycle,
                side: Side::Graph,
            });
        }
    }
    None
}

/// A chordless `x`–`y` path with at least four edges inside the induced
/// subgraph on `allowed` vertices (`x` and `y` must be allowed), ignoring any
/// `x`–`y` edge. The search is exhaustive: every such path starts `x-w`,
/// ends `z-y`, and joins `w` to `z` through vertices outside `N[x] ∪ N[y]`.
pub fn long_chordless_path(
    g: &Graph,
    x: usize,
    y: usize,
    allowed: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    anchored_long_path(g, x, y, allowed, &mut Scratch::new(g.vertex_count()))
}

struct Scratch {
    blocked: Vec<bool>,
    label: Vec<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            blocked: vec![false; n],
            label: vec![usize::MAX; n],
        }
    }
}

fn anchored_long_path(
    g: &Graph,
    x: usize,
    y: usize,
    allowed: impl Fn(usize) -> bool,
    scratch: &mut Scratch,
) -> Option<Vec<usize>> {
    let ws: Vec<usize> = g
        .adj(x)
        .iter()
        .copied()
        .filter(|&w| w != y && allowed(w) && !g.has_edge(w, y))
        .collect();
    if ws.is_empty() {
        return None;
    }
    let zs: Vec<usize> = g
        .adj(y)
        .iter()
        .copied()
        .filter(|&z| z != x && allowed(z) && !g.has_edge(z, x))
        .collect();
    if zs.is_empty() {
        return None;
    }

    let Scratch { blocked, label } = scratch;
    for (t, b) in blocked.iter_mut().enumerate() {
        *b = !allowed(t);
    }
    for s in [x, y] {
        blocked[s] = true;
        for &t in g.adj(s) {
            blocked[t] = true;
        }
    }
    label_components(g, blocked, label);

    let attach = |w: usize| -> BTreeSet<usize> {
        g.adj(w)
            .iter()
            .filter(|&&t| !blocked[t])
            .map(|&t| label[t])
            .collect()
    };
    let z_attach: Vec<BTreeSet<usize>> = zs.iter().map(|&z| attach(z)).collect();
    for &w in &ws {
        let wa = attach(w);
        if wa.is_empty() {
            continue;
        }
        for (&z, za) in zs.iter().zip(&z_attach) {
            if g.has_edge(w, z) || wa.is_disjoint(za) {
                continue;
            }
            let connector = g
                .shortest_path_masked(w, z, |t| !blocked[t] || t == w || t == z)
                .expect("shared component implies a connector");
            let mut path = vec![x];
            path.extend(connector);
            path.push(y);
            return Some(path);
        }
    }
    None
}

fn label_components(g: &Graph, blocked: &[bool], label: &mut [usize]) {
    label.iter_mut().for_each(|l| *l = usize::MAX);
    let mut next = 0;
    let mut stack = Vec::new();
    for s in g.vertices() {
        if blocked[s] || label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        stack.push(s);
        while let Some(a) = stack.pop() {
            for &b in g.adj(a) {
                if !blocked[b] && label[b] == usize::MAX {
                    label[b] = next;
                    stack.push(b);
                }
            }
        }
        next += 1;
    }
}

/// `Ok(())` when `g` is weakly chordal, otherwise the first hole found
/// (graph side checked first).
pub fn check_weakly_chordal(g: &Graph) -> Result<(), HoleWitness> {
    if let Some(h) = find_hole(g) {
        return Err(h);
    }
    if let Some(mut h) = find_hole(&g.complement()) {
        h.side = Side::Complement;
        return Err(h);
    }
    Ok(())
}

pub fn is_weakly_chordal(g: &Graph) -> bool {
    check_weakly_chordal(g).is_ok()
}

/// Non-adjacent, connected, and separated by removing their common
/// neighborhood: every chordless `u`–`v` path then has length two.
pub fn is_two_pair(g: &Graph, u: usize, v: usize) -> Result<bool, GraphError> {
    g.check_pair(u, v)?;
    if g.has_edge(u, v) {
        return Ok(false);
    }
    let none = BTreeSet::new();
    if !g.reachable(u, v, &none)? {
        return Ok(false);
    }
    let common = g.common_neighbors(u, v)?;
    Ok(!g.reachable(u, v, &common)?)
}

/// An edge is peripheral when it is not the middle edge of an induced P4.
pub fn is_peripheral_edge(g: &Graph, u: usize, v: usize) -> Result<bool, GraphError> {
    g.check_pair(u, v)?;
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge(u, v));
    }
    for &x in g.adj(u) {
        if x == v || g.has_edge(x, v) {
            continue;
        }
        for &y in g.adj(v) {
            if y != u && !g.has_edge(y, u) && !g.has_edge(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Census of the chordless length-3 paths `u-a-b-v` between a non-adjacent
/// pair: `a` is a u-side attachment, `b` a v-side attachment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P3Stats {
    /// Number of distinct v-side attachments.
    pub l: usize,
    /// Number of distinct u-side attachments.
    pub k_att: usize,
    /// For each v-side attachment (ascending id), the number of u-side
    /// attachments it is adjacent to along some path.
    pub degrees: Vec<usize>,
    /// Sum of `degrees`.
    pub t: usize,
    pub path_count: usize,
    /// Unordered pairs of paths sharing no internal vertex.
    pub disjoint_pair_count: usize,
    /// The paths as `[u, a, b, v]`, lexicographic.
    pub paths: Vec<[usize; 4]>,
}

impl P3Stats {
    /// `Σ_{i≠j} d_i d_j` over ordered pairs of v-side attachments: the number
    /// of ordered path pairs ending through different v-side vertices.
    pub fn cross_pair_count(&self) -> usize {
        let sq: usize = self.degrees.iter().map(|d| d * d).sum();
        self.t * self.t - sq
    }
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

pub fn count_p3_stats(g: &Graph, u: usize, v: usize) -> Result<P3Stats, GraphError> {
    g.check_pair(u, v)?;
    if g.has_edge(u, v) {
        return Err(GraphError::EdgePresent(u, v));
    }
    let mut paths = Vec::new();
    for &a in g.adj(u) {
        if g.has_edge(a, v) {
            continue;
        }
        for &b in g.adj(a) {
            if b != u && g.has_edge(b, v) && !g.has_edge(b, u) {
                paths.push([u, a, b, v]);
            }
        }
    }
    let u_side: BTreeSet<usize> = paths.iter().map(|p| p[1]).collect();
    let v_side: BTreeSet<usize> = paths.iter().map(|p| p[2]).collect();
    let degrees: Vec<usize> = v_side
        .iter()
        .map(|&b| paths.iter().filter(|p| p[2] == b).count())
        .collect();
    let t: usize = degrees.iter().sum();
    let a_shared: usize = u_side
        .iter()
        .map(|&a| choose2(paths.iter().filter(|p| p[1] == a).count()))
        .sum();
    let b_shared: usize = degrees.iter().map(|&d| choose2(d)).sum();
    let stats = P3Stats {
        l: v_side.len(),
        k_att: u_side.len(),
        t,
        path_count: paths.len(),
        disjoint_pair_count: choose2(paths.len()) - a_shared - b_shared,
        degrees,
        paths,
    };
    debug_assert!(stats.path_count <= stats.l * stats.k_att);
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_chordless_paths() {
        let p5 = Graph::path(5);
        assert_eq!(
            long_chordless_path(&p5, 0, 4, |_| true),
            Some(vec![0, 1, 2, 3, 4])
        );
        assert_eq!(long_chordless_path(&p5, 0, 4, |t| t != 2), None);
        assert_eq!(long_chordless_path(&Graph::cycle(6), 0, 3, |_| true), None);
        assert_eq!(
            long_chordless_path(&Graph::cycle(7), 0, 3, |_| true),
            Some(vec![0, 6, 5, 4, 3])
        );
    }
    use crate::fixtures;

    #[test]
    fn holes_in_small_cycles() {
        let h = find_hole(&Graph::cycle(5)).expect("C5 is a hole");
        assert_eq!(h.cycle.len(), 5);
        assert!(h.verify(&Graph::cycle(5)));
        assert!(find_hole(&Graph::cycle(4)).is_none());
        let c6 = Graph::cycle(6);
        assert!(find_hole(&c6.complement()).is_none());
        let h = find_hole(&c6).unwrap();
        assert_eq!(h.cycle.len(), 6);
        assert!(h.verify(&c6));
    }

    #[test]
    fn recognition_examples() {
        assert!(is_weakly_chordal(&fixtures::f1()));
        let mut g = fixtures::f2();
        g.add_edge(fixtures::gadget::U, fixtures::gadget::V)
            .unwrap();
        let w = check_weakly_chordal(&g).unwrap_err();
        assert_eq!(w.side, Side::Complement);
        assert_eq!(w.cycle.len(), 6);
        assert!(w.verify(&g));
        assert!(is_weakly_chordal(&Graph::path(9)));
        assert!(is_weakly_chordal(&Graph::new(8)));
        assert!(is_weakly_chordal(&Graph::complete(6)));
    }

    #[test]
    fn two_pair_examples() {
        let c4 = Graph::cycle(4);
        assert!(is_two_pair(&c4, 0, 2).unwrap());
        assert!(!is_two_pair(&Graph::cycle(6), 0, 3).unwrap());
        assert!(!is_two_pair(&c4, 0, 1).unwrap());
        assert!(!is_two_pair(&Graph::new(2), 0, 1).unwrap());
    }

    #[test]
    fn peripheral_examples() {
        let p4 = Graph::path(4);
        assert!(!is_peripheral_edge(&p4, 1, 2).unwrap());
        assert!(is_peripheral_edge(&p4, 0, 1).unwrap());
        assert!(is_peripheral_edge(&Graph::complete(3), 0, 2).unwrap());
        assert_eq!(
            is_peripheral_edge(&p4, 0, 2),
            Err(GraphError::MissingEdge(0, 2))
        );
    }

    #[test]
    fn p3_stats_single_path() {
        let s = count_p3_stats(&Graph::path(4), 0, 3).unwrap();
        assert_eq!(
            (s.l, s.k_att, s.path_count, s.disjoint_pair_count),
            (1, 1, 1, 0)
        );
    }

    #[test]
    fn p3_stats_bipartite_gadget() {
        // u=0, c1=1, c2=2, b1=3, b2=4, v=5
        let g = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (3, 5),
                (4, 5),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
            ],
        )
        .unwrap();
        let s = count_p3_stats(&g, 0, 5).unwrap();
        assert_eq!(s.path_count, 4);
        assert_eq!(s.l * s.k_att, 4);
        assert_eq!(s.disjoint_pair_count, 2);
        assert_eq!(s.cross_pair_count(), 8);
    }

    #[test]
    fn p3_stats_rejects_edges() {
        assert_eq!(
            count_p3_stats(&Graph::path(2), 0, 1),
            Err(GraphError::EdgePresent(0, 1))
        );
    }
}
