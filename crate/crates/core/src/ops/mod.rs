//! The local-improvement operations.
//!
//! Every finder takes the graph and the current cover by shared reference
//! and returns the first applicable [`Move`] in a fixed scan order: paths in
//! cover order, head orientation before tail orientation, indices and
//! vertices ascending. Moves are applied with [`apply_move`].

mod add;
mod double_rep;
mod extension;
mod lookahead;
mod recover;
mod rep;

use std::fmt;

use serde::Serialize;

use crate::cover::{Cover, Path};
use crate::error::{Error, Result};

pub use add::find_add;
pub use double_rep::{find_double_rep, find_double_rep_with, DoubleRepConfig};
pub use extension::{find_extension, longest_extension_order};
pub use lookahead::find_lookahead;
pub use recover::find_recover;
pub use rep::find_rep;

pub(crate) use extension::Walker;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Add,
    Rep,
    DoubleRep,
    Recover,
    Lookahead,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] =
        [MoveKind::Add, MoveKind::Rep, MoveKind::DoubleRep, MoveKind::Recover, MoveKind::Lookahead];
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Add => "add",
            MoveKind::Rep => "rep",
            MoveKind::DoubleRep => "double_rep",
            MoveKind::Recover => "recover",
            MoveKind::Lookahead => "lookahead",
        })
    }
}

/// A replacement of some paths of the cover by new ones.
///
/// `added` is already normalized: no added path has order >= 2k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub removed: Vec<Path>,
    pub added: Vec<Path>,
    pub coverage_delta: isize,
}

impl Move {
    pub(crate) fn new(kind: MoveKind, k: usize, removed: Vec<Path>, added: Vec<Path>) -> Move {
        let mut norm = Cover::from_paths(k, added);
        norm.normalize();
        let added = norm.paths().to_vec();
        let gained: usize = added.iter().map(Path::order).sum();
        let lost: usize = removed.iter().map(Path::order).sum();
        Move { kind, removed, added, coverage_delta: gained as isize - lost as isize }
    }

    /// Change in the number of paths of order exactly `order`.
    pub fn order_count_delta(&self, order: usize) -> isize {
        let count = |ps: &[Path]| ps.iter().filter(|p| p.order() == order).count() as isize;
        count(&self.added) - count(&self.removed)
    }
}

/// Applies `m` to `c`, returning the new cover.
pub fn apply_move(c: &Cover, m: &Move) -> Result<Cover> {
    let mut next = c.clone();
    apply_move_in_place(&mut next, m)?;
    Ok(next)
}

/// Removes `m.removed`, appends `m.added`, then splits any path of order
/// at least 2k. Rejects moves whose removed paths are absent or whose added paths
/// collide with the rest of the cover; `c` is unchanged on error.
pub fn apply_move_in_place(c: &mut Cover, m: &Move) -> Result<()> {
    let mut next = c.clone();
    for p in &m.removed {
        if next.remove_path(p).is_none() {
            return Err(Error::StaleMove(format!("path {p} is not in the cover")));
        }
    }
    let mut used: std::collections::HashSet<usize> =
        next.paths().iter().flat_map(|p| p.vertices().iter().copied()).collect();
    for p in &m.added {
        for &v in p.vertices() {
            if !used.insert(v) {
                return Err(Error::StaleMove(format!("vertex {v} of added path {p} is already covered")));
            }
        }
    }
    for p in &m.added {
        next.push(p.clone());
    }
    next.normalize();
    *c = next;
    Ok(())
}

pub(crate) fn require_k4(c: &Cover) -> Result<()> {
    if c.k() != 4 {
        return Err(Error::InvalidK { k: c.k(), reason: "operation is defined for k = 4 only".into() });
    }
    Ok(())
}

/// `seq` read head-first or tail-first.
pub(crate) fn oriented(p: &Path, reversed: bool) -> Vec<usize> {
    let mut vs = p.vertices().to_vec();
    if reversed {
        vs.reverse();
    }
    vs
}

/// `rev(ext) ++ seq[t..]`: the extension hung in front of position `t`.
pub(crate) fn graft_front(ext: &[usize], seq: &[usize], t: usize) -> Path {
    let mut vs: Vec<usize> = ext.iter().rev().copied().collect();
    vs.extend_from_slice(&seq[t..]);
    Path::new(vs)
}
