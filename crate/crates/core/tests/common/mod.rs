//! Brute-force reference checks used by the integration tests. Everything
//! here works from the edge set alone through bitmask adjacency, so it shares
//! no code with the library's recognizer or path searches.
#![allow(dead_code)]

use wcgen::Graph;

pub const BRUTE_LIMIT: usize = 20;

pub fn masks(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(
        n <= BRUTE_LIMIT,
        "brute force is limited to {BRUTE_LIMIT} vertices"
    );
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn complement_masks(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    (0..n).map(|v| !adj[v] & all & !(1 << v)).collect()
}

fn connected(adj: &[u32], set: u32) -> bool {
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & set;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == set
}

/// A vertex set inducing a cycle of length at least 5, found by trying every
/// subset.
pub fn brute_hole_masks(adj: &[u32]) -> Option<u32> {
    let n = adj.len();
    for set in 1u32..(1u32 << n) {
        if set.count_ones() < 5 {
            continue;
        }
        let mut all_two = true;
        let mut s = set;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            if (adj[v] & set).count_ones() != 2 {
                all_two = false;
                break;
            }
        }
        if all_two && connected(adj, set) {
            return Some(set);
        }
    }
    None
}

pub fn brute_has_hole(g: &Graph) -> bool {
    brute_hole_masks(&masks(g)).is_some()
}

pub fn brute_weakly_chordal(g: &Graph) -> bool {
    let adj = masks(g);
    brute_hole_masks(&adj).is_none() && brute_hole_masks(&complement_masks(&adj)).is_none()
}

/// Every chordless `u`–`v` path, by depth-first extension.
pub fn chordless_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let adj = masks(g);
    let mut out = Vec::new();
    let mut path = vec![u];
    extend(&adj, v, &mut path, 1 << u, &mut out);
    out
}

fn extend(adj: &[u32], target: usize, path: &mut Vec<usize>, used: u32, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    let earlier = used & !(1 << last);
    let mut cand = adj[last] & !used;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if adj[w] & earlier != 0 {
            continue;
        }
        path.push(w);
        if w == target {
            out.push(path.clone());
        } else {
            extend(adj, target, path, used | (1 << w), out);
        }
        path.pop();
    }
}

/// Non-adjacent, connected, and every chordless path between them has two edges.
pub fn brute_two_pair(g: &Graph, u: usize, v: usize) -> bool {
    if g.has_edge(u, v) {
        return false;
    }
    let paths = chordless_paths(g, u, v);
    !paths.is_empty() && paths.iter().all(|p| p.len() == 3)
}

/// Chordless `u-a-b-v` paths by scanning all ordered pairs `(a, b)`.
pub fn brute_p3_paths(g: &Graph, u: usize, v: usize) -> Vec<[usize; 4]> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let distinct = a != b && ![u, v].contains(&a) && ![u, v].contains(&b);
            if distinct
                && g.has_edge(u, a)
                && g.has_edge(a, b)
                && g.has_edge(b, v)
                && !g.has_edge(u, b)
                && !g.has_edge(a, v)
                && !g.has_edge(u, v)
            {
                out.push([u, a, b, v]);
            }
        }
    }
    out
}

/// Unordered pairs of paths with no internal vertex in common.
pub fn brute_disjoint_pairs(paths: &[[usize; 4]]) -> usize {
    let mut count = 0;
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            let (p, q) = (paths[i], paths[j]);
            if p[1] != q[1] && p[1] != q[2] && p[2] != q[1] && p[2] != q[2] {
                count += 1;
            }
        }
    }
    count
}

/// Graph isomorphism by trying every bijection; small graphs only.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    assign(a, b, 0, &mut image, &mut used)
}

fn assign(a: &Graph, b: &Graph, v: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.vertex_count() {
        return true;
    }
    for w in 0..b.vertex_count() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|x| a.has_edge(x, v) == b.has_edge(image[x], w));
        if consistent {
            image[v] = w;
            used[w] = true;
            if assign(a, b, v + 1, image, used) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}

/// Checks that `cycle` is an induced cycle of length at least 5 under `adjacent`.
pub fn is_induced_cycle(cycle: &[usize], adjacent: impl Fn(usize, usize) -> bool) -> bool {
    let k = cycle.len();
    if k < 5 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (0..k).all(|j| {
            if i == j {
                return true;
            }
            let consecutive = (i + 1) % k == j || (j + 1) % k == i;
            adjacent(cycle[i], cycle[j]) == consecutive
        })
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<(usize, usize)> = pairs
        .zip(bits.iter().cycle())
        .filter(|(_, &b)| b)
        .map(|(p, _)| p)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// A generated weakly chordal graph: both methods, any valid density.
pub fn generated(n: usize, density: f64, seed: u64, two_pair: bool) -> Graph {
    let min = n - 1;
    let max = n * (n - 1) / 2;
    let m = min + ((max - min) as f64 * density).round() as usize;
    let method = if two_pair {
        wcgen::Method::TwoPair
    } else {
        wcgen::Method::Separator
    };
    let params = wcgen::GenParams::new(n, m, seed)
        .with_method(method)
        .with_gate(wcgen::GateMode::On);
    wcgen::generate_graph(&params).unwrap().0
}
