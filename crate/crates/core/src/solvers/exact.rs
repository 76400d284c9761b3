//! Exact maximum coverage by vertex-disjoint paths of order >= k.
//!
//! Any path of order >= 2k splits into pieces of order in `[k, 2k-1]`, so it
//! is enough to pack traceable vertex sets of those sizes. Traceable sets
//! are grown layer by layer with a Held–Karp end table kept only for sets
//! that occur; the packing is a memoized recursion over subsets that
//! branches on the lowest remaining vertex.

use std::collections::HashMap;

use crate::cover::{Cover, Path};
use crate::error::{check_k, Error, Result};
use crate::graph::Graph;

/// Largest graph [`exact_max_cover`] accepts.
pub const DEFAULT_EXACT_LIMIT: usize = 18;
/// Largest limit [`exact_max_cover_with_limit`] accepts (dense memo of `2^n` bytes).
pub const MAX_EXACT_LIMIT: usize = 24;

const UNSET: u8 = u8::MAX;

/// Maximum number of vertices coverable by vertex-disjoint paths of order
/// >= k, with one optimal cover. Refuses graphs above [`DEFAULT_EXACT_LIMIT`].
pub fn exact_max_cover(g: &Graph, k: usize) -> Result<(usize, Cover)> {
    exact_max_cover_with_limit(g, k, DEFAULT_EXACT_LIMIT)
}

pub fn exact_max_cover_with_limit(g: &Graph, k: usize, limit: usize) -> Result<(usize, Cover)> {
    check_k(k)?;
    if limit > MAX_EXACT_LIMIT {
        return Err(Error::InvalidParameter(format!("exact limit {limit} above the maximum {MAX_EXACT_LIMIT}")));
    }
    let n = g.n();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n < k {
        return Ok((0, Cover::new(k)));
    }

    let ends = traceable_sets(g, 2 * k - 1);
    let mut by_low: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &mask in ends.keys() {
        if mask.count_ones() as usize >= k {
            by_low[mask.trailing_zeros() as usize].push(mask);
        }
    }
    for items in &mut by_low {
        // larger sets first so the early exit on a full cover triggers sooner
        items.sort_unstable_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    }

    let full = ((1u64 << n) - 1) as u32;
    let mut packer = Packer { by_low: &by_low, memo: vec![UNSET; 1 << n] };
    let best = packer.best(full) as usize;

    let mut paths = Vec::new();
    let mut s = full;
    while s != 0 {
        let f = packer.best(s);
        let low = s.trailing_zeros() as usize;
        let rest = s & !(1 << low);
        if packer.best(rest) == f {
            s = rest;
            continue;
        }
        let item = by_low[low]
            .iter()
            .copied()
            .find(|&t| t & s == t && t.count_ones() as u8 + packer.best(s ^ t) == f)
            .expect("memo value is realized by some set");
        paths.push(Path::new(trace(g, &ends, item)));
        s ^= item;
    }
    Ok((best, Cover::from_paths(k, paths)))
}

/// End table of every traceable vertex set of order at most `max_order`:
/// bit `v` of `ends[S]` is set iff `G[S]` has a Hamiltonian path ending at `v`.
fn traceable_sets(g: &Graph, max_order: usize) -> HashMap<u32, u32> {
    let mut all = HashMap::new();
    let mut layer: HashMap<u32, u32> = (0..g.n()).map(|v| (1u32 << v, 1u32 << v)).collect();
    for _ in 1..max_order {
        let mut next: HashMap<u32, u32> = HashMap::new();
        for (&mask, &ends) in &layer {
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                for &w in g.neighbors(v) {
                    if mask >> w & 1 == 0 {
                        *next.entry(mask | 1 << w).or_insert(0) |= 1 << w;
                    }
                }
            }
        }
        all.extend(layer);
        layer = next;
    }
    all.extend(layer);
    all
}

/// One Hamiltonian path of `G[mask]`, read back from the end table.
fn trace(g: &Graph, ends: &HashMap<u32, u32>, mask: u32) -> Vec<usize> {
    let mut order = Vec::with_capacity(mask.count_ones() as usize);
    let mut cur = mask;
    let mut v = ends[&cur].trailing_zeros() as usize;
    loop {
        order.push(v);
        cur &= !(1 << v);
        if cur == 0 {
            break;
        }
        let prev = ends[&cur];
        v = g.neighbors(v).iter().copied().find(|&u| prev >> u & 1 == 1).expect("end table is consistent");
    }
    order.reverse();
    order
}

struct Packer<'a> {
    by_low: &'a [Vec<u32>],
    memo: Vec<u8>,
}

impl Packer<'_> {
    /// Most vertices of `s` coverable by disjoint traceable sets from `by_low`.
    fn best(&mut self, s: u32) -> u8 {
        if s == 0 {
            return 0;
        }
        let cached = self.memo[s as usize];
        if cached != UNSET {
            return cached;
        }
        let size = s.count_ones() as u8;
        let low = s.trailing_zeros() as usize;
        let mut best = self.best(s & !(1 << low));
        let by_low = self.by_low;
        for &t in &by_low[low] {
            if best == size {
                break;
            }
            if t & s != t {
                continue;
            }
            best = best.max(t.count_ones() as u8 + self.best(s ^ t));
        }
        self.memo[s as usize] = best;
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn six_cycle() {
        let g = cycle(6);
        let (best, c) = exact_max_cover(&g, 4).unwrap();
        assert_eq!(best, 6);
        assert_eq!(c.coverage(), 6);
        assert!(validate_cover(&g, &c).is_empty());
    }

    #[test]
    fn edgeless() {
        assert_eq!(exact_max_cover(&Graph::empty(10), 4).unwrap().0, 0);
        assert_eq!(exact_max_cover(&Graph::empty(3), 4).unwrap().0, 0);
    }

    #[test]
    fn long_cycle_is_split() {
        let g = cycle(17);
        let (best, c) = exact_max_cover(&g, 4).unwrap();
        assert_eq!(best, 17);
        assert!(validate_cover(&g, &c).is_empty());
    }

    #[test]
    fn star_has_no_long_path() {
        let edges: Vec<_> = (1..8).map(|i| (0, i)).collect();
        let g = Graph::from_edges(8, &edges).unwrap();
        assert_eq!(exact_max_cover(&g, 4).unwrap().0, 0);
    }

    #[test]
    fn size_limit() {
        let g = Graph::empty(19);
        assert!(matches!(exact_max_cover(&g, 4), Err(Error::TooLarge { n: 19, limit: 18 })));
        assert_eq!(exact_max_cover_with_limit(&g, 4, 20).unwrap().0, 0);
        assert!(exact_max_cover_with_limit(&g, 4, 25).is_err());
    }
}
