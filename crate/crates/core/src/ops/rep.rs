use super::{graft_front, oriented, Move, MoveKind, Walker};
use crate::cover::Cover;
use crate::graph::Graph;

/// Finds a path whose prefix `u_0..u_{t-1}` can be traded for an extension
/// at `u_t` of order at least `t + 1`.
///
/// Indices run over `0..ceil(l/2)` head-first and `0..floor(l/2)` tail-first,
/// so every vertex is tried from its nearer end. The extension searched has
/// order exactly `t + 1`, and only while `t + 1 <= k - 1`: an extension of
/// order `k` is a free k-path, which Add picks up first.
pub fn find_rep(g: &Graph, c: &Cover) -> Option<Move> {
    let k = c.k();
    let mut w = Walker::free(g, c);
    for p in c.paths() {
        let l = p.order();
        for (reversed, span) in [(false, l.div_ceil(2)), (true, l / 2)] {
            let seq = oriented(p, reversed);
            for t in 0..span {
                let need = t + 1;
                if need > k - 1 {
                    break;
                }
                if let Some(e) = w.first_extension(seq[t], need) {
                    let new = graft_front(&e, &seq, t);
                    return Some(Move::new(MoveKind::Rep, k, vec![p.clone()], vec![new]));
                }
            }
        }
    }
    None
}
