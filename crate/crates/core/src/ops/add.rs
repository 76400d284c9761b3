use std::ops::ControlFlow;

use super::{Move, MoveKind, Walker};
use crate::cover::{Cover, Path};
use crate::graph::Graph;

/// Finds a k-path among the uncovered vertices, trying start vertices in
/// ascending order.
pub fn find_add(g: &Graph, c: &Cover) -> Option<Move> {
    let k = c.k();
    let mut w = Walker::free(g, c);
    let mut found = None;
    for s in 0..g.n() {
        let _ = w.paths_from(s, k, &mut |p| {
            found = Some(p.to_vec());
            ControlFlow::Break(())
        });
        if let Some(p) = found {
            return Some(Move::new(MoveKind::Add, k, vec![], vec![Path::new(p)]));
        }
    }
    None
}
