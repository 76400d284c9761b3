//! Depth-first enumeration of simple paths in the uncovered subgraph.

use std::ops::ControlFlow;

use crate::cover::{Cover, Extension};
use crate::graph::Graph;

/// Enumerates simple paths over a set of available vertices, visiting
/// neighbors in ascending index order.
pub(crate) struct Walker<'g> {
    g: &'g Graph,
    avail: Vec<bool>,
    stack: Vec<usize>,
}

impl<'g> Walker<'g> {
    pub(crate) fn new(g: &'g Graph, avail: Vec<bool>) -> Self {
        Walker { g, avail, stack: Vec::new() }
    }

    /// Walker over the vertices not covered by `c`.
    pub(crate) fn free(g: &'g Graph, c: &Cover) -> Self {
        let avail = c.covered_mask(g.n()).into_iter().map(|b| !b).collect();
        Walker::new(g, avail)
    }

    pub(crate) fn set_avail(&mut self, vs: &[usize], value: bool) {
        for &v in vs {
            self.avail[v] = value;
        }
    }

    /// Calls `f` on every simple path of exactly `order` vertices that
    /// starts at `start`, in DFS order.
    pub(crate) fn paths_from<F>(&mut self, start: usize, order: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if order == 0 || !self.avail[start] {
            return ControlFlow::Continue(());
        }
        self.avail[start] = false;
        self.stack.push(start);
        let r = self.grow(order, f);
        self.stack.pop();
        self.avail[start] = true;
        r
    }

    fn grow<F>(&mut self, order: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.stack.len() == order {
            return f(&self.stack);
        }
        let g = self.g;
        let last = self.stack[self.stack.len() - 1];
        for &w in g.neighbors(last) {
            if !self.avail[w] {
                continue;
            }
            self.avail[w] = false;
            self.stack.push(w);
            let r = self.grow(order, f);
            self.stack.pop();
            self.avail[w] = true;
            r?;
        }
        ControlFlow::Continue(())
    }

    /// Calls `f` on every extension of exactly `order` vertices at `anchor`.
    /// For `order == 0` the single empty extension is reported.
    pub(crate) fn extensions<F>(&mut self, anchor: usize, order: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if order == 0 {
            return f(&[]);
        }
        let g = self.g;
        for &s in g.neighbors(anchor) {
            self.paths_from(s, order, f)?;
        }
        ControlFlow::Continue(())
    }

    /// First extension of exactly `order` vertices at `anchor`, if any.
    pub(crate) fn first_extension(&mut self, anchor: usize, order: usize) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.extensions(anchor, order, &mut |e| {
            found = Some(e.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    /// Order of the longest extension at `anchor`, searching no further than `cap`.
    pub(crate) fn longest_extension(&mut self, anchor: usize, cap: usize) -> usize {
        let mut best = 0;
        for order in 1..=cap {
            if self.first_extension(anchor, order).is_none() {
                break;
            }
            best = order;
        }
        best
    }
}

/// Searches for an extension at `anchor` of order in `[min_order, max_order]`
/// that avoids `forbidden`.
///
/// The search starts at the uncovered neighbors of `anchor` in ascending
/// order and grows paths depth-first through uncovered vertices. Any path of
/// order above `min_order` has a prefix of order exactly `min_order` that is
/// itself an extension, so the first hit always has order `min_order`.
pub fn find_extension(
    g: &Graph,
    c: &Cover,
    anchor: usize,
    min_order: usize,
    max_order: usize,
    forbidden: &[usize],
) -> Option<Extension> {
    if min_order == 0 || min_order > max_order {
        return None;
    }
    let mut w = Walker::free(g, c);
    w.set_avail(forbidden, false);
    w.first_extension(anchor, min_order).map(|vertices| Extension { anchor, vertices })
}

/// Order of the longest extension at `anchor`, capped at `cap`.
pub fn longest_extension_order(g: &Graph, c: &Cover, anchor: usize, cap: usize) -> usize {
    Walker::free(g, c).longest_extension(anchor, cap)
}
