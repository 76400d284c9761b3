//! Hand-built graphs on which the local search gets stuck far from the
//! optimum. Each comes with the stuck cover; the planted paths are an
//! optimal cover of every vertex.

use super::Instance;
use crate::cover::{Cover, Path};
use crate::graph::Graph;

fn build(n: usize, optimal: &[&[usize]], stuck: &[&[usize]]) -> (Instance, Cover) {
    let mut edges = Vec::new();
    for p in optimal.iter().chain(stuck) {
        edges.extend(p.windows(2).map(|w| (w[0], w[1])));
    }
    let graph = Graph::from_edges_dedup(n, &edges).expect("fixture edges are in range");
    let planted_paths = optimal.iter().map(|p| Path::new(p.to_vec())).collect();
    let inst = Instance { graph, k: 4, n, d: 0.0, index: 0, master_seed: 0, planted_paths };
    let cover = Cover::from_paths(4, stuck.iter().map(|p| Path::new(p.to_vec())).collect());
    (inst, cover)
}

/// 24 vertices covered by five optimal paths, where the two 5-paths
/// `0-1-2-3-4` and `5-6-7-8-9` admit no Add, Rep or DoubleRep. Coverage 10
/// against 24 makes the k = 4 bound of 12/5 tight.
///
/// Labels: `u0..u4 = 0..4`, `v0..v4 = 5..9`, `w0..w5 = 10..15`, `x0..x7 = 16..23`.
pub fn approx1_tight_fixture() -> (Instance, Cover) {
    let u = |i: usize| i;
    let v = |i: usize| 5 + i;
    let w = |i: usize| 10 + i;
    let x = |i: usize| 16 + i;
    build(
        24,
        &[
            &[u(4), u(0), v(0), v(4)],
            &[w(0), u(1), w(1), v(1), w(2)],
            &[x(0), x(1), u(2), x(2), x(3)],
            &[x(4), x(5), v(2), x(6), x(7)],
            &[w(3), u(3), w(4), v(3), w(5)],
        ],
        &[&[u(0), u(1), u(2), u(3), u(4)], &[v(0), v(1), v(2), v(3), v(4)]],
    )
}

/// 32 vertices covered by seven optimal paths, where the cover
/// `{u0-u1-u2-u3-y7, v0..v3, w0..w3, x0-x1-x2-x3-z7}` of 18 vertices admits
/// none of the five operations. Coverage 18 against 32 gives ratio 16/9.
///
/// Labels: `u, v, w, x` 0-3 at `0..16` in blocks of four, `y0..y7 = 16..23`,
/// `z0..z7 = 24..31`.
pub fn approx2_lower_bound_fixture() -> (Instance, Cover) {
    let u = |i: usize| i;
    let v = |i: usize| 4 + i;
    let w = |i: usize| 8 + i;
    let x = |i: usize| 12 + i;
    let y = |i: usize| 16 + i;
    let z = |i: usize| 24 + i;
    build(
        32,
        &[
            &[u(0), v(0), w(0), x(0)],
            &[y(0), u(1), y(1), v(1), y(2)],
            &[z(0), x(1), z(1), w(1), z(2)],
            &[y(3), u(2), y(4), v(2), y(5)],
            &[z(3), x(2), z(4), w(2), z(5)],
            &[y(6), u(3), y(7), v(3)],
            &[w(3), z(7), x(3), z(6)],
        ],
        &[
            &[u(0), u(1), u(2), u(3), y(7)],
            &[v(0), v(1), v(2), v(3)],
            &[w(0), w(1), w(2), w(3)],
            &[x(0), x(1), x(2), x(3), z(7)],
        ],
    )
}
