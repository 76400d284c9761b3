//! Simple undirected graph on dense vertex indices `0..n`.
//!
//! Adjacency is kept twice: a packed bit matrix for constant-time
//! `adjacent(u, v)` queries and sorted neighbor lists for iteration.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::Path as FsPath;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    nbrs: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, bits: vec![0; n * words], nbrs: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Self-loops, duplicates (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently skips edges already present.
    pub(crate) fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u < n && v < n && g.adjacent(u, v) {
                continue;
            }
            g.insert_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::EdgeOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adjacent(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.nbrs[u].push(v);
        self.nbrs[v].push(u);
        self.m += 1;
        Ok(())
    }

    fn finish(&mut self) {
        for list in &mut self.nbrs {
            list.sort_unstable();
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbors of `v` in ascending order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.nbrs[u].iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Parses the text format: a header line `n m` followed by `m` lines
    /// `u v` with `u < v < n`.
    pub fn read_text<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader.lines().enumerate().filter_map(|(i, l)| match l {
            Ok(s) if s.trim().is_empty() => None,
            other => Some((i + 1, other)),
        });
        let (hline, header) = lines
            .next()
            .ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let header = header?;
        let (n, m) = parse_pair(&header, hline)?;
        let mut g = Graph::empty(n);
        let mut seen = 0usize;
        for (lineno, line) in lines {
            let line = line?;
            let (u, v) = parse_pair(&line, lineno)?;
            if u >= v {
                return Err(Error::Parse { line: lineno, msg: format!("expected u < v, got {u} {v}") });
            }
            g.insert_edge(u, v)?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header declares {m} edges, found {seen}"),
            });
        }
        g.finish();
        Ok(g)
    }

    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(self.to_text().as_bytes())?;
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Graph::read_text(std::io::BufReader::new(f))
    }

    pub fn save(&self, path: impl AsRef<FsPath>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::Parse { line: lineno, msg: "expected two integers".into() })?;
        tok.parse()
            .map_err(|_| Error::Parse { line: lineno, msg: format!("bad integer {tok:?}") })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse { line: lineno, msg: "trailing tokens".into() });
    }
    Ok((a, b))
}
