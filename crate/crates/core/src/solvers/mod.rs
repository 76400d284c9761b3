//! Driver loops and the exact oracle.

mod exact;
mod ratio;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::cover::{validate_cover, Cover};
use crate::error::{check_k, Error, Result};
use crate::graph::Graph;
use crate::ops::{
    apply_move_in_place, find_add, find_double_rep, find_lookahead, find_recover, find_rep, Move, MoveKind,
};

pub use exact::{exact_max_cover, exact_max_cover_with_limit, DEFAULT_EXACT_LIMIT, MAX_EXACT_LIMIT};
pub use ratio::theoretical_ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Add, Rep, DoubleRep; any `k >= 4`.
    Approx1,
    /// Approx1's operations plus Re-cover and Look-ahead; `k = 4` only.
    Approx2,
}

impl Algorithm {
    /// Operations tried each iteration, in priority order.
    pub fn operations(self) -> &'static [MoveKind] {
        match self {
            Algorithm::Approx1 => &MoveKind::ALL[..3],
            Algorithm::Approx2 => &MoveKind::ALL,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Approx1 => "approx1",
            Algorithm::Approx2 => "approx2",
        }
    }

    pub(crate) fn check_k(self, k: usize) -> Result<()> {
        check_k(k)?;
        if self == Algorithm::Approx2 && k != 4 {
            return Err(Error::InvalidK { k, reason: "approx2 requires k = 4".into() });
        }
        Ok(())
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "approx1" => Ok(Algorithm::Approx1),
            "approx2" => Ok(Algorithm::Approx2),
            _ => Err(Error::InvalidParameter(format!("unknown algorithm {s:?} (expected approx1 or approx2)"))),
        }
    }
}

/// Number of applied moves per operation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounts {
    pub add: usize,
    pub rep: usize,
    pub double_rep: usize,
    pub recover: usize,
    pub lookahead: usize,
}

impl OpCounts {
    pub fn get(&self, kind: MoveKind) -> usize {
        match kind {
            MoveKind::Add => self.add,
            MoveKind::Rep => self.rep,
            MoveKind::DoubleRep => self.double_rep,
            MoveKind::Recover => self.recover,
            MoveKind::Lookahead => self.lookahead,
        }
    }

    fn bump(&mut self, kind: MoveKind) {
        let slot = match kind {
            MoveKind::Add => &mut self.add,
            MoveKind::Rep => &mut self.rep,
            MoveKind::DoubleRep => &mut self.double_rep,
            MoveKind::Recover => &mut self.recover,
            MoveKind::Lookahead => &mut self.lookahead,
        };
        *slot += 1;
    }

    pub fn total(&self) -> usize {
        MoveKind::ALL.iter().map(|&k| self.get(k)).sum()
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub cover: Cover,
    pub covered: usize,
    pub op_counts: OpCounts,
    pub iterations: usize,
    pub elapsed: Duration,
}

/// First applicable move of `alg` on `c`, trying operations in priority order.
pub fn next_move(g: &Graph, c: &Cover, alg: Algorithm) -> Result<Option<Move>> {
    alg.check_k(c.k())?;
    for &kind in alg.operations() {
        let m = match kind {
            MoveKind::Add => find_add(g, c),
            MoveKind::Rep => find_rep(g, c),
            MoveKind::DoubleRep => find_double_rep(g, c),
            MoveKind::Recover => find_recover(g, c)?,
            MoveKind::Lookahead => find_lookahead(g, c)?,
        };
        if m.is_some() {
            return Ok(m);
        }
    }
    Ok(None)
}

/// Runs `alg` from `start` until no operation applies.
///
/// `start` must be a valid cover of `g` (see [`validate_cover`]).
pub fn solve_from(g: &Graph, start: Cover, alg: Algorithm) -> Result<SolveResult> {
    let clock = Instant::now();
    let k = start.k();
    alg.check_k(k)?;
    if k > g.n() {
        return Err(Error::InvalidK { k, reason: format!("exceeds the vertex count {}", g.n()) });
    }
    if let Some(v) = validate_cover(g, &start).first() {
        return Err(Error::InvalidParameter(format!("starting cover is invalid: {v}")));
    }
    let mut cover = start;
    let mut op_counts = OpCounts::default();
    while let Some(m) = next_move(g, &cover, alg)? {
        apply_move_in_place(&mut cover, &m)?;
        op_counts.bump(m.kind);
    }
    Ok(SolveResult {
        covered: cover.coverage(),
        cover,
        iterations: op_counts.total(),
        op_counts,
        elapsed: clock.elapsed(),
    })
}

pub fn solve(g: &Graph, k: usize, alg: Algorithm) -> Result<SolveResult> {
    solve_from(g, Cover::new(k), alg)
}

/// Approx1 from the empty cover: Add, else Rep, else DoubleRep, until none applies.
pub fn approx1(g: &Graph, k: usize) -> Result<SolveResult> {
    solve(g, k, Algorithm::Approx1)
}

/// Approx2 (`k = 4`) from the empty cover.
pub fn approx2(g: &Graph) -> Result<SolveResult> {
    solve(g, 4, Algorithm::Approx2)
}
