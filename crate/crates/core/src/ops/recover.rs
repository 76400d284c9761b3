use super::{require_k4, Move, MoveKind};
use crate::cover::{Cover, Path};
use crate::error::Result;
use crate::graph::Graph;

/// Largest vertex set handled by the subset tables (two paths of order 7
/// need 14).
const MAX_UNION: usize = 16;

/// For each subset `m` of the `s` local vertices, the set of vertices at
/// which some Hamiltonian path of `G[m]` ends (empty iff `m` is not
/// traceable).
fn path_ends(adj: &[u32]) -> Vec<u32> {
    let s = adj.len();
    let mut ends = vec![0u32; 1 << s];
    for v in 0..s {
        ends[1 << v] = 1 << v;
    }
    for mask in 1usize..(1 << s) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in 0..s {
            if mask >> v & 1 == 0 && adj[v] & e != 0 {
                ends[mask | 1 << v] |= 1 << v;
            }
        }
    }
    ends
}

/// Reads one Hamiltonian path of `G[mask]` back out of the end table.
fn trace(adj: &[u32], ends: &[u32], mask: u32) -> Vec<usize> {
    let mut order = Vec::with_capacity(mask.count_ones() as usize);
    let mut cur = mask;
    let mut v = ends[cur as usize].trailing_zeros() as usize;
    loop {
        order.push(v);
        cur ^= 1 << v;
        if cur == 0 {
            break;
        }
        v = (ends[cur as usize] & adj[v]).trailing_zeros() as usize;
    }
    order
}

fn local_adjacency(g: &Graph, verts: &[usize]) -> Vec<u32> {
    verts
        .iter()
        .map(|&a| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &b)| g.adjacent(a, b))
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect()
}

/// Partitions `verts` into traceable parts of order >= 4 with at least one
/// part of order exactly 4. Candidate 4-sets are tried in lexicographic
/// order of local index; the remainder is used whole or split in two.
fn repartition(g: &Graph, verts: &[usize]) -> Option<Vec<Path>> {
    let s = verts.len();
    if !(8..=MAX_UNION).contains(&s) {
        return None;
    }
    let adj = local_adjacency(g, verts);
    let ends = path_ends(&adj);
    let traceable = |m: u32| ends[m as usize] != 0;
    let full = ((1u64 << s) - 1) as u32;

    let split_rest = |r: u32| -> Option<Vec<u32>> {
        if traceable(r) {
            return Some(vec![r]);
        }
        if r.count_ones() < 8 {
            return None;
        }
        let low = r & r.wrapping_neg();
        let mut a = r;
        while a != 0 {
            if a & low != 0 && a.count_ones() >= 4 && (r ^ a).count_ones() >= 4 && traceable(a) && traceable(r ^ a) {
                return Some(vec![a, r ^ a]);
            }
            a = (a - 1) & r;
        }
        None
    };

    for i in 0..s {
        for j in i + 1..s {
            for x in j + 1..s {
                for y in x + 1..s {
                    let t = (1u32 << i) | (1 << j) | (1 << x) | (1 << y);
                    if !traceable(t) {
                        continue;
                    }
                    if let Some(rest) = split_rest(full ^ t) {
                        let to_path = |m: u32| Path::new(trace(&adj, &ends, m).into_iter().map(|l| verts[l]).collect());
                        let mut parts = vec![to_path(t)];
                        parts.extend(rest.into_iter().map(to_path));
                        return Some(parts);
                    }
                }
            }
        }
    }
    None
}

/// Finds two paths of order >= 5 whose joint vertex set can be re-covered
/// by paths of order >= 4, at least one of order exactly 4.
///
/// Each side of a candidate pair has at most 7 vertices and so cannot be
/// cut into two parts of order >= 4 on its own; pairs without an edge
/// between them are skipped for that reason.
pub fn find_recover(g: &Graph, c: &Cover) -> Result<Option<Move>> {
    require_k4(c)?;
    let paths = c.paths();
    for i in 0..paths.len() {
        let p = &paths[i];
        if p.order() < 5 {
            continue;
        }
        for q in &paths[i + 1..] {
            if q.order() < 5 || p.order() + q.order() > MAX_UNION {
                continue;
            }
            let linked = p.vertices().iter().any(|&a| q.vertices().iter().any(|&b| g.adjacent(a, b)));
            if !linked {
                continue;
            }
            let mut verts: Vec<usize> = p.vertices().iter().chain(q.vertices()).copied().collect();
            verts.sort_unstable();
            if let Some(parts) = repartition(g, &verts) {
                return Ok(Some(Move::new(MoveKind::Recover, 4, vec![p.clone(), q.clone()], parts)));
            }
        }
    }
    Ok(None)
}
