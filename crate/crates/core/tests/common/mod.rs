//! Brute-force reference computations, written without the library's
//! search code so they can check it.

#![allow(dead_code)]

use pathcover::{Cover, Graph};

/// Every simple path (as a vertex sequence) of `g` restricted to `allowed`,
/// starting at `start`, with order between 1 and `max_order`.
pub fn simple_paths_from(g: &Graph, allowed: &[bool], start: usize, max_order: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, allowed: &[bool], cur: &mut Vec<usize>, max_order: usize, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == max_order {
            return;
        }
        let last = *cur.last().unwrap();
        for w in 0..g.n() {
            if allowed[w] && g.adjacent(last, w) && !cur.contains(&w) {
                cur.push(w);
                go(g, allowed, cur, max_order, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if allowed[start] {
        go(g, allowed, &mut vec![start], max_order, &mut out);
    }
    out
}

pub fn free_mask(g: &Graph, c: &Cover) -> Vec<bool> {
    let mut free = vec![true; g.n()];
    for p in c.paths() {
        for &v in p.vertices() {
            free[v] = false;
        }
    }
    free
}

/// Whether the uncovered part of `g` contains a simple path on `k` vertices.
pub fn free_path_exists(g: &Graph, c: &Cover, k: usize) -> bool {
    let free = free_mask(g, c);
    (0..g.n()).any(|s| simple_paths_from(g, &free, s, k).iter().any(|p| p.len() == k))
}

/// Order of the longest extension at `anchor` (0 if none), uncapped.
pub fn longest_extension(g: &Graph, c: &Cover, anchor: usize) -> usize {
    let free = free_mask(g, c);
    (0..g.n())
        .filter(|&s| free[s] && g.adjacent(anchor, s))
        .flat_map(|s| simple_paths_from(g, &free, s, g.n()))
        .map(|p| p.len())
        .max()
        .unwrap_or(0)
}

/// Checks that no extension at a covered vertex is longer than its distance
/// to the nearer end of its path. Returns the first offending
/// `(vertex, distance, extension order)`.
pub fn rep_fixed_point_violation(g: &Graph, c: &Cover) -> Option<(usize, usize, usize)> {
    for p in c.paths() {
        let l = p.order();
        for (t, &v) in p.vertices().iter().enumerate() {
            let dist = t.min(l - 1 - t);
            let e = longest_extension(g, c, v);
            if e > dist {
                return Some((v, dist, e));
            }
        }
    }
    None
}

/// Maximum coverage by vertex-disjoint paths of order >= k, by trying every
/// packing of simple paths. Only for very small graphs.
pub fn brute_force_opt(g: &Graph, k: usize) -> usize {
    let all = vec![true; g.n()];
    let mut sets: Vec<u32> = Vec::new();
    for s in 0..g.n() {
        for p in simple_paths_from(g, &all, s, g.n()) {
            if p.len() >= k {
                sets.push(p.iter().fold(0u32, |m, &v| m | 1 << v));
            }
        }
    }
    sets.sort_unstable();
    sets.dedup();
    fn pack(sets: &[u32], used: u32) -> usize {
        sets.iter()
            .enumerate()
            .filter(|&(_, &s)| s & used == 0)
            .map(|(i, &s)| s.count_ones() as usize + pack(&sets[i + 1..], used | s))
            .max()
            .unwrap_or(0)
    }
    pack(&sets, 0)
}

/// Small deterministic pseudo-random graph for table-driven tests.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_xoshiro::SplitMix64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
