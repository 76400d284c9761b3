//! Paths, path collections (covers) and their structural checks.

use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A simple path given by its vertex sequence, head first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn head(&self) -> usize {
        self.0[0]
    }

    pub fn tail(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// Vertex at distance `j` from the head.
    pub fn u(&self, j: usize) -> usize {
        self.0[j]
    }

    /// Vertex at distance `j` from the tail.
    pub fn v(&self, j: usize) -> usize {
        self.0[self.0.len() - 1 - j]
    }

    pub fn reversed(&self) -> Path {
        let mut vs = self.0.clone();
        vs.reverse();
        Path(vs)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// True if the vertices are distinct and consecutive ones adjacent in `g`.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        path_problem(g, &self.0).is_none()
    }
}

impl From<Vec<usize>> for Path {
    fn from(v: Vec<usize>) -> Self {
        Path(v)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A path of uncovered vertices hanging off a covered `anchor`.
/// `vertices[0]` is the endpoint adjacent to the anchor. The empty
/// extension is allowed and stands for "no extension needed".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub anchor: usize,
    pub vertices: Vec<usize>,
}

impl Extension {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// A collection of paths, each meant to have order in `[k, 2k-1]`.
///
/// Construction does not enforce the invariants; [`validate_cover`] reports
/// what is wrong with a given collection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cover {
    k: usize,
    paths: Vec<Path>,
}

impl Cover {
    pub fn new(k: usize) -> Self {
        Cover { k, paths: Vec::new() }
    }

    pub fn from_paths(k: usize, paths: Vec<Path>) -> Self {
        Cover { k, paths }
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Total number of covered vertices.
    pub fn coverage(&self) -> usize {
        self.paths.iter().map(Path::order).sum()
    }

    /// Number of paths of exactly the given order.
    pub fn count_of_order(&self, order: usize) -> usize {
        self.paths.iter().filter(|p| p.order() == order).count()
    }

    /// `mask[v]` is true iff `v` lies on some path. Vertices `>= n` are ignored.
    pub fn covered_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for p in &self.paths {
            for &v in p.vertices() {
                if v < n {
                    mask[v] = true;
                }
            }
        }
        mask
    }

    pub fn push(&mut self, p: Path) {
        self.paths.push(p);
    }

    pub(crate) fn remove_path(&mut self, p: &Path) -> Option<Path> {
        let idx = self.paths.iter().position(|q| q == p)?;
        Some(self.paths.remove(idx))
    }

    /// Splits `p` into a k-path (its first k vertices) and the remainder,
    /// repeating on the remainder while it still has order >= 2k.
    pub fn split_long_path(&mut self, p: &Path) -> Result<()> {
        if p.order() < 2 * self.k {
            return Err(Error::PathTooShort { order: p.order(), k: self.k });
        }
        let idx = self.paths.iter().position(|q| q == p).ok_or(Error::PathNotInCover)?;
        let pieces = split_pieces(self.paths[idx].vertices(), self.k);
        self.paths.splice(idx..=idx, pieces);
        Ok(())
    }

    /// Splits every path of order >= 2k.
    pub fn normalize(&mut self) {
        let k = self.k;
        if self.paths.iter().all(|p| p.order() < 2 * k) {
            return;
        }
        let old = std::mem::take(&mut self.paths);
        for p in old {
            if p.order() >= 2 * k {
                self.paths.extend(split_pieces(p.vertices(), k));
            } else {
                self.paths.push(p);
            }
        }
    }

    /// Reads a cover file: one path per line, vertex indices separated by
    /// whitespace. Blank lines are skipped.
    pub fn read_text<R: BufRead>(k: usize, reader: R) -> Result<Self> {
        let mut paths = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let vs = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse { line: i + 1, msg: format!("bad vertex {t:?}") })
                })
                .collect::<Result<Vec<_>>>()?;
            paths.push(Path(vs));
        }
        Ok(Cover { k, paths })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.paths {
            let line: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(self.to_text().as_bytes())?;
        Ok(())
    }
}

/// Cuts a sequence into k-vertex pieces from the head until the rest has
/// order below 2k.
fn split_pieces(vs: &[usize], k: usize) -> Vec<Path> {
    let mut out = Vec::new();
    let mut rest = vs;
    while rest.len() >= 2 * k {
        out.push(Path(rest[..k].to_vec()));
        rest = &rest[k..];
    }
    out.push(Path(rest.to_vec()));
    out
}

/// One violated cover invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A vertex lies on two paths (or twice on one path set).
    Overlap { vertex: usize, first: usize, second: usize },
    /// Path `path` is not a simple path of the graph.
    NotAPath { path: usize, reason: String },
    /// Path order outside `[k, 2k-1]`.
    OrderOutOfRange { path: usize, order: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap { vertex, first, second } => {
                write!(f, "overlap: vertex {vertex} on paths {first} and {second}")
            }
            Violation::NotAPath { path, reason } => write!(f, "non-path: path {path}: {reason}"),
            Violation::OrderOutOfRange { path, order, k } => {
                write!(f, "order out of range: path {path} has order {order}, expected [{k}, {}]", 2 * k - 1)
            }
        }
    }
}

fn path_problem(g: &Graph, vs: &[usize]) -> Option<String> {
    if vs.is_empty() {
        return Some("empty path".into());
    }
    if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
        return Some(format!("vertex {v} out of range"));
    }
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if std::mem::replace(&mut seen[v], true) {
            return Some(format!("vertex {v} repeated"));
        }
    }
    vs.windows(2)
        .find(|w| !g.adjacent(w[0], w[1]))
        .map(|w| format!("{}-{} is not an edge", w[0], w[1]))
}

/// Lists every violated cover invariant; empty iff `c` is a valid cover of `g`.
pub fn validate_cover(g: &Graph, c: &Cover) -> Vec<Violation> {
    let k = c.k();
    let mut out = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    for (i, p) in c.paths().iter().enumerate() {
        if let Some(reason) = path_problem(g, p.vertices()) {
            out.push(Violation::NotAPath { path: i, reason });
        }
        if p.order() < k || p.order() > 2 * k - 1 {
            out.push(Violation::OrderOutOfRange { path: i, order: p.order(), k });
        }
        for &v in p.vertices().iter().filter(|&&v| v < g.n()) {
            match owner[v] {
                Some(j) if j != i => out.push(Violation::Overlap { vertex: v, first: j, second: i }),
                _ => owner[v] = Some(i),
            }
        }
    }
    out
}
