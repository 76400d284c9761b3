use std::ops::ControlFlow;

use super::{graft_front, Move, MoveKind, Walker};
use crate::cover::{Cover, Path};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleRepConfig {
    /// Skip cut positions whose required extension order exceeds what can
    /// exist once Add and Rep are inapplicable. Only sound when the caller
    /// has already established that neither applies.
    pub prune: bool,
}

impl Default for DoubleRepConfig {
    fn default() -> Self {
        DoubleRepConfig { prune: true }
    }
}

/// Finds a path `P` that splits into two paths of order >= k,
/// `P1 = u_0..u_a + e1` and `P2 = e2 + u_b..tail` with `a < b`, where `e1`
/// and `e2` are vertex-disjoint extensions at `u_a` and `u_b`.
///
/// With positions counted from the head, the "suffix from `v_j`" form of
/// the operation is the same family of moves, so a single orientation
/// covers both. Every extension of the required order at `u_a` is tried
/// as `e1`; `e2` is then searched with `e1` blocked.
pub fn find_double_rep(g: &Graph, c: &Cover) -> Option<Move> {
    find_double_rep_with(g, c, DoubleRepConfig::default())
}

pub fn find_double_rep_with(g: &Graph, c: &Cover, cfg: DoubleRepConfig) -> Option<Move> {
    let k = c.k();
    let mut first = Walker::free(g, c);
    let mut second = Walker::free(g, c);
    // With Rep exhausted, the longest extension at position `i` of an
    // `l`-path is bounded by its distance to the nearer end.
    let cap = |i: usize, l: usize| i.min(l - 1 - i);

    for p in c.paths() {
        let seq = p.vertices();
        let l = seq.len();
        for a in 0..l {
            let need1 = k.saturating_sub(a + 1);
            if cfg.prune && need1 > cap(a, l) {
                continue;
            }
            for b in a + 1..l {
                let need2 = k.saturating_sub(l - b);
                if cfg.prune && need2 > cap(b, l) {
                    continue;
                }
                if need2 > 0 && second.first_extension(seq[b], need2).is_none() {
                    continue;
                }
                let mut found = None;
                let _ = first.extensions(seq[a], need1, &mut |e1| {
                    second.set_avail(e1, false);
                    let e2 = if need2 == 0 { Some(Vec::new()) } else { second.first_extension(seq[b], need2) };
                    second.set_avail(e1, true);
                    match e2 {
                        Some(e2) => {
                            found = Some((e1.to_vec(), e2));
                            ControlFlow::Break(())
                        }
                        None => ControlFlow::Continue(()),
                    }
                });
                if let Some((e1, e2)) = found {
                    let mut p1 = seq[..=a].to_vec();
                    p1.extend(e1);
                    let p2 = graft_front(&e2, seq, b);
                    return Some(Move::new(MoveKind::DoubleRep, k, vec![p.clone()], vec![Path::new(p1), p2]));
                }
            }
        }
    }
    None
}
