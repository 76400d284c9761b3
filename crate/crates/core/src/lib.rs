//! Local-improvement approximation algorithms for covering as many vertices
//! of a graph as possible with vertex-disjoint paths of order at least `k`.
//!
//! [`solvers::approx1`] works for any `k >= 4`; [`solvers::approx2`] is the
//! stronger `k = 4` variant with two extra operations. An exact
//! subset-DP oracle, a planted-instance generator and a benchmark harness
//! are included for evaluating them.

pub mod bench;
pub mod cover;
pub mod error;
pub mod graph;
pub mod instances;
pub mod ops;
pub mod solvers;

pub use cover::{validate_cover, Cover, Extension, Path, Violation};
pub use error::{Error, Result};
pub use graph::Graph;
pub use instances::{generate, Instance};
pub use solvers::{approx1, approx2, exact_max_cover, solve, solve_from, theoretical_ratio, Algorithm, SolveResult};
