//! Runs algorithms over grids of generated instances and summarizes the
//! performance ratios.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::{density_key, generate};
use crate::solvers::{solve, Algorithm, OpCounts};

/// Instance indices of a grid cell: an explicit list or a count `0..count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceSet {
    Count(u64),
    List(Vec<u64>),
}

impl InstanceSet {
    pub fn indices(&self) -> Vec<u64> {
        match self {
            InstanceSet::Count(c) => (0..*c).collect(),
            InstanceSet::List(l) => l.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub k: Vec<usize>,
    pub n: Vec<usize>,
    pub d: Vec<f64>,
    pub instances: InstanceSet,
    pub algorithms: Vec<Algorithm>,
    #[serde(default)]
    pub master_seed: u64,
}

impl GridSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        let spec: GridSpec = serde_json::from_str(s).map_err(|e| Error::InvalidGrid(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidGrid(msg.into()));
        if self.k.is_empty() || self.n.is_empty() || self.d.is_empty() {
            return bad("k, n and d lists must be non-empty");
        }
        if self.instances.indices().is_empty() {
            return bad("no instance indices");
        }
        if self.algorithms.is_empty() {
            return bad("algorithm list is empty");
        }
        if let Some(d) = self.d.iter().find(|d| !(0.0..=1.0).contains(*d)) {
            return Err(Error::InvalidGrid(format!("density {d} is outside [0, 1]")));
        }
        if let Some(&k) = self.k.iter().find(|&&k| k < 4) {
            return Err(Error::InvalidGrid(format!("k = {k} is below 4")));
        }
        if self.algorithms.contains(&Algorithm::Approx2) && self.k.iter().any(|&k| k != 4) {
            return bad("approx2 can only be paired with k = 4");
        }
        for &k in &self.k {
            if let Some(&n) = self.n.iter().find(|&&n| n < k) {
                return Err(Error::InvalidGrid(format!("n = {n} is smaller than k = {k}")));
            }
        }
        Ok(())
    }
}

/// One (instance, algorithm) run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRecord {
    pub k: usize,
    pub n: usize,
    pub d: f64,
    pub i: u64,
    pub alg: Algorithm,
    pub covered: usize,
    pub opt: usize,
    /// `opt / covered`; infinite when nothing is covered.
    pub ratio: f64,
    pub op_counts: OpCounts,
    pub elapsed_ms: f64,
}

/// Runs every algorithm on every instance of the grid. Instances run in
/// parallel; records come back ordered by `(k, n, d, i)` as listed in the
/// grid, then by algorithm.
pub fn run_grid(spec: &GridSpec) -> Result<Vec<ExperimentRecord>> {
    spec.validate()?;
    let indices = spec.instances.indices();
    let mut keys = Vec::new();
    for &k in &spec.k {
        for &n in &spec.n {
            for &d in &spec.d {
                keys.extend(indices.iter().map(|&i| (k, n, d, i)));
            }
        }
    }
    let per_instance: Vec<Vec<ExperimentRecord>> = keys
        .par_iter()
        .map(|&(k, n, d, i)| {
            let inst = generate(k, n, d, i, spec.master_seed)?;
            spec.algorithms
                .iter()
                .map(|&alg| {
                    let r = solve(&inst.graph, k, alg)?;
                    let opt = inst.planted_opt();
                    Ok(ExperimentRecord {
                        k,
                        n,
                        d,
                        i,
                        alg,
                        covered: r.covered,
                        opt,
                        ratio: if r.covered == 0 { f64::INFINITY } else { opt as f64 / r.covered as f64 },
                        op_counts: r.op_counts,
                        elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(per_instance.into_iter().flatten().collect())
}

pub const RECORD_HEADER: [&str; 14] = [
    "k", "n", "d", "i", "alg", "covered", "opt", "ratio", "adds", "reps", "double_reps", "recovers", "lookaheads",
    "elapsed_ms",
];

pub const AGGREGATE_HEADER: [&str; 8] = ["k", "n", "d", "alg", "mean_ratio", "max_ratio", "mean_ms", "count"];

fn fmt_ratio(r: f64) -> String {
    if r.is_infinite() {
        "inf".into()
    } else {
        format!("{r:?}")
    }
}

pub fn write_records<W: Write>(records: &[ExperimentRecord], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(RECORD_HEADER)?;
    for r in records {
        let c = &r.op_counts;
        out.write_record([
            r.k.to_string(),
            r.n.to_string(),
            format!("{:?}", r.d),
            r.i.to_string(),
            r.alg.to_string(),
            r.covered.to_string(),
            r.opt.to_string(),
            fmt_ratio(r.ratio),
            c.add.to_string(),
            c.rep.to_string(),
            c.double_rep.to_string(),
            c.recover.to_string(),
            c.lookahead.to_string(),
            format!("{:.3}", r.elapsed_ms),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Summary of one `(k, n, d, alg)` group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AggregateRow {
    pub k: usize,
    pub n: usize,
    pub d: f64,
    pub alg: Algorithm,
    pub mean_ratio: f64,
    pub max_ratio: f64,
    pub mean_ms: f64,
    pub count: usize,
}

/// Mean and max ratio and mean time per `(k, n, d, alg)`, rows sorted by
/// that key.
pub fn aggregate(records: &[ExperimentRecord]) -> Vec<AggregateRow> {
    let mut sorted: Vec<&ExperimentRecord> = records.iter().collect();
    sorted.sort_by_key(|r| (r.k, r.n, density_key(r.d), r.alg));
    let mut rows: Vec<AggregateRow> = Vec::new();
    for group in sorted.chunk_by(|a, b| (a.k, a.n, density_key(a.d), a.alg) == (b.k, b.n, density_key(b.d), b.alg)) {
        let count = group.len();
        let first = group[0];
        rows.push(AggregateRow {
            k: first.k,
            n: first.n,
            d: first.d,
            alg: first.alg,
            mean_ratio: group.iter().map(|r| r.ratio).sum::<f64>() / count as f64,
            max_ratio: group.iter().map(|r| r.ratio).fold(f64::NEG_INFINITY, f64::max),
            mean_ms: group.iter().map(|r| r.elapsed_ms).sum::<f64>() / count as f64,
            count,
        });
    }
    rows
}

pub fn write_aggregate<W: Write>(rows: &[AggregateRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(AGGREGATE_HEADER)?;
    for r in rows {
        out.write_record([
            r.k.to_string(),
            r.n.to_string(),
            format!("{:?}", r.d),
            r.alg.to_string(),
            fmt_ratio(r.mean_ratio),
            fmt_ratio(r.max_ratio),
            format!("{:.3}", r.mean_ms),
            r.count.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}
