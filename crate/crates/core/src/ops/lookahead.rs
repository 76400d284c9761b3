use std::ops::ControlFlow;

use super::{find_rep, graft_front, oriented, require_k4, Move, MoveKind, Walker};
use crate::cover::{Cover, Path};
use crate::error::Result;
use crate::graph::Graph;

/// Look-ahead for k = 4: trade a prefix of a path for an equally long
/// extension and take a Rep that this enables.
///
/// Case (i) scans every path, both orientations, `t` in `{2, 3}` and every
/// extension of order exactly `t` at `u_t`. Reading the path from both ends
/// also covers `u_0..u_t + e(u_t)` for a center vertex `u_t`. The path is swapped for
/// `e(u_t) + u_t..tail` in a scratch copy of the cover, and [`find_rep`]
/// is run over the whole scratch cover.
///
/// Case (ii) handles 6-paths: `P` becomes `u_0-u_1-u_2 + e(u_2)` and the
/// freed `v_2-v_1-v_0` is hung as an extension at a neighbor `w` of `v_0`
/// or `v_2`, where `w` is on `e(u_2)`, on `u_0-u_1`, or within distance 1
/// of an end of another path.
pub fn find_lookahead(g: &Graph, c: &Cover) -> Result<Option<Move>> {
    require_k4(c)?;
    if let Some(m) = trial_then_rep(g, c) {
        return Ok(Some(m));
    }
    Ok(six_path_swap(g, c))
}

fn extensions_of_order(w: &mut Walker<'_>, anchor: usize, order: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = w.extensions(anchor, order, &mut |e| {
        out.push(e.to_vec());
        ControlFlow::Continue(())
    });
    out
}

fn trial_then_rep(g: &Graph, c: &Cover) -> Option<Move> {
    let mut w = Walker::free(g, c);
    for (idx, p) in c.paths().iter().enumerate() {
        for reversed in [false, true] {
            let seq = oriented(p, reversed);
            for t in (2..=3).filter(|&t| t < seq.len()) {
                for e in extensions_of_order(&mut w, seq[t], t) {
                    let trial = graft_front(&e, &seq, t);
                    let mut paths = c.paths().to_vec();
                    paths[idx] = trial.clone();
                    let scratch = Cover::from_paths(c.k(), paths);
                    let Some(rep) = find_rep(g, &scratch) else {
                        continue;
                    };
                    let m = if rep.removed[0] == trial {
                        Move::new(MoveKind::Lookahead, 4, vec![p.clone()], rep.added)
                    } else {
                        let mut added = vec![trial];
                        added.extend(rep.added);
                        Move::new(MoveKind::Lookahead, 4, vec![p.clone(), rep.removed[0].clone()], added)
                    };
                    return Some(m);
                }
            }
        }
    }
    None
}

/// Rep at `w`, which sits at index `pos` of `seq`, using `ext` (whose first
/// vertex is adjacent to `w`). Assumes `pos` is within distance 1 of an end.
fn rep_at(seq: &[usize], pos: usize, ext: &[usize]) -> Path {
    let l = seq.len();
    if pos <= l - 1 - pos {
        graft_front(ext, seq, pos)
    } else {
        let rev: Vec<usize> = seq.iter().rev().copied().collect();
        graft_front(ext, &rev, l - 1 - pos)
    }
}

fn six_path_swap(g: &Graph, c: &Cover) -> Option<Move> {
    let mut walker = Walker::free(g, c);
    for p in c.paths().iter().filter(|p| p.order() == 6) {
        for reversed in [false, true] {
            let seq = oriented(p, reversed);
            for e in extensions_of_order(&mut walker, seq[2], 2) {
                let mut shortened = seq[..3].to_vec();
                shortened.extend_from_slice(&e);
                // (endpoint, freed segment read from the endpoint)
                let tails = [(seq[5], [seq[5], seq[4], seq[3]]), (seq[3], [seq[3], seq[4], seq[5]])];
                for (end, ext) in tails {
                    for &w in g.neighbors(end) {
                        if let Some(pos) = shortened.iter().position(|&x| x == w) {
                            if pos == 2 {
                                continue;
                            }
                            let grown = rep_at(&shortened, pos, &ext);
                            return Some(Move::new(MoveKind::Lookahead, 4, vec![p.clone()], vec![grown]));
                        }
                        if p.contains(w) {
                            continue;
                        }
                        let Some(q) = c.paths().iter().find(|q| q.contains(w)) else {
                            continue;
                        };
                        let qs = q.vertices();
                        let pos = qs.iter().position(|&x| x == w).unwrap();
                        if pos.min(qs.len() - 1 - pos) > 1 {
                            continue;
                        }
                        let grown = rep_at(qs, pos, &ext);
                        return Some(Move::new(
                            MoveKind::Lookahead,
                            4,
                            vec![p.clone(), q.clone()],
                            vec![Path::new(shortened), grown],
                        ));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;
    use crate::ops::{apply_move, find_add, find_double_rep};

    #[test]
    fn six_path_swap_onto_own_extension() {
        // a0..a5 = 0..5, f0 = 6, f1 = 7; f1 ~ a2, a5 ~ f0
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 7), (7, 2), (5, 6)]).unwrap();
        let c = Cover::from_paths(4, vec![Path::new((0..6).collect())]);
        let m = find_lookahead(&g, &c).unwrap().unwrap();
        assert_eq!(m.coverage_delta, 2);
        let next = apply_move(&c, &m).unwrap();
        assert_eq!(next.coverage(), 8);
        assert!(validate_cover(&g, &next).is_empty());
        let joined: Vec<usize> = m.added.iter().flat_map(|p| p.vertices().to_vec()).collect();
        assert_eq!(joined, vec![3, 4, 5, 6, 7, 2, 1, 0]);
    }

    #[test]
    fn six_path_swap_onto_other_path() {
        // P = 0..5, f0 = 6, f1 = 7 with 7 ~ u2; Q = 8..11 with v0 = 5 ~ 9 (distance 1)
        let g = Graph::from_edges(
            12,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 7), (7, 2), (8, 9), (9, 10), (10, 11), (5, 9)],
        )
        .unwrap();
        let c = Cover::from_paths(4, vec![Path::new((0..6).collect()), Path::new((8..12).collect())]);
        assert!(find_add(&g, &c).is_none());
        assert!(crate::ops::find_rep(&g, &c).is_none());
        assert!(find_double_rep(&g, &c).is_none());
        let m = find_lookahead(&g, &c).unwrap().unwrap();
        assert_eq!(m.removed.len(), 2);
        assert_eq!(m.coverage_delta, 1);
        let next = apply_move(&c, &m).unwrap();
        assert!(validate_cover(&g, &next).is_empty());
        assert_eq!(next.coverage(), 11);
    }

    #[test]
    fn trial_enables_rep_elsewhere() {
        // P = a0..a4 = 0..4, f1 = 6 ~ a2, f0 = 5 ~ f1; Q = b0..b3 = 7..10 with b0 ~ a1
        let g = Graph::from_edges(
            11,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 2), (7, 8), (8, 9), (9, 10), (7, 1)],
        )
        .unwrap();
        let c = Cover::from_paths(4, vec![Path::new((0..5).collect()), Path::new((7..11).collect())]);
        assert!(crate::ops::find_rep(&g, &c).is_none());
        let m = find_lookahead(&g, &c).unwrap().unwrap();
        assert_eq!(m.kind, MoveKind::Lookahead);
        assert_eq!(m.coverage_delta, 1);
        let next = apply_move(&c, &m).unwrap();
        assert!(validate_cover(&g, &next).is_empty());
        assert_eq!(next.coverage(), 10);
    }

    #[test]
    fn failed_trial_leaves_cover_untouched() {
        // same as above without the b0 ~ a1 edge
        let g = Graph::from_edges(11, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 2), (7, 8), (8, 9), (9, 10)]).unwrap();
        let c = Cover::from_paths(4, vec![Path::new((0..5).collect()), Path::new((7..11).collect())]);
        let before = c.clone();
        assert!(find_lookahead(&g, &c).unwrap().is_none());
        assert_eq!(c, before);
    }

    #[test]
    fn rejects_other_k() {
        let g = Graph::empty(4);
        assert!(find_lookahead(&g, &Cover::new(6)).is_err());
    }
}
