//! Random instances with a planted cover of every vertex, and the two
//! hand-built worst-case fixtures.

mod fixtures;
mod io;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::cover::Path;
use crate::error::{check_k, Error, Result};
use crate::graph::Graph;

pub use fixtures::{approx1_tight_fixture, approx2_lower_bound_fixture};
pub use io::{load_instance, metadata_path, save_instance, InstanceMetadata};

/// A graph together with the key it was generated from and the planted
/// paths, which cover all `n` vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
    pub n: usize,
    pub d: f64,
    pub index: u64,
    pub master_seed: u64,
    /// Planted paths in final (permuted) vertex labels.
    pub planted_paths: Vec<Path>,
}

impl Instance {
    /// Optimum coverage; the planted paths cover every vertex.
    pub fn planted_opt(&self) -> usize {
        self.n
    }
}

/// `d` scaled to an integer so that the seed does not depend on float formatting.
pub(crate) fn density_key(d: f64) -> u64 {
    (d * 1e6).round() as u64
}

fn instance_seed(master_seed: u64, k: usize, n: usize, d: f64, i: u64) -> u64 {
    [k as u64, n as u64, density_key(d), i]
        .into_iter()
        .fold(SplitMix64::seed_from_u64(master_seed).next_u64(), |h, x| {
            SplitMix64::seed_from_u64(h ^ x).next_u64()
        })
}

/// Orders of the planted paths: uniform draws from `[k, 2k-1]` while at
/// least `3k-1` vertices remain, then one or two paths for the remainder.
fn path_orders<R: Rng>(rng: &mut R, k: usize, n: usize) -> Vec<usize> {
    let mut orders = Vec::new();
    let mut rem = n;
    while rem >= 3 * k - 1 {
        let l = rng.gen_range(k..=2 * k - 1);
        orders.push(l);
        rem -= l;
    }
    if rem < 2 * k {
        orders.push(rem);
    } else {
        let lo = k.max(rem - (2 * k - 1));
        let hi = (2 * k - 1).min(rem - k);
        let a = rng.gen_range(lo..=hi);
        orders.push(a);
        orders.push(rem - a);
    }
    orders
}

/// Generates instance `i` of the family `(k, n, d)`.
///
/// Vertices are laid out as consecutive planted paths, every other pair
/// becomes an edge with probability `d` (pairs in lexicographic order),
/// and finally the labels are shuffled. All draws come from one SplitMix64
/// stream keyed by `(master_seed, k, n, round(d * 1e6), i)`.
pub fn generate(k: usize, n: usize, d: f64, i: u64, master_seed: u64) -> Result<Instance> {
    check_k(k)?;
    if n < k {
        return Err(Error::InvalidParameter(format!("n = {n} is smaller than k = {k}")));
    }
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::InvalidParameter(format!("density {d} is outside [0, 1]")));
    }
    let mut rng = SplitMix64::seed_from_u64(instance_seed(master_seed, k, n, d, i));

    let orders = path_orders(&mut rng, k, n);
    let mut path_of = Vec::with_capacity(n);
    for (p, &l) in orders.iter().enumerate() {
        path_of.extend(std::iter::repeat_n(p, l));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let on_path = v == u + 1 && path_of[u] == path_of[v];
            if on_path || rng.gen::<f64>() < d {
                edges.push((u, v));
            }
        }
    }

    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (label[u], label[v])).collect();
    let graph = Graph::from_edges(n, &edges)?;

    let mut start = 0;
    let planted_paths = orders
        .iter()
        .map(|&l| {
            let p = Path::new((start..start + l).map(|v| label[v]).collect());
            start += l;
            p
        })
        .collect();

    Ok(Instance { graph, k, n, d, index: i, master_seed, planted_paths })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{validate_cover, Cover};

    #[test]
    fn planted_paths_partition_vertices() {
        for (k, n) in [(4, 7), (4, 11), (4, 12), (5, 16), (8, 50), (4, 100)] {
            let inst = generate(k, n, 0.05, 3, 11).unwrap();
            let cover = Cover::from_paths(k, inst.planted_paths.clone());
            assert!(validate_cover(&inst.graph, &cover).is_empty(), "k={k} n={n}");
            assert_eq!(cover.coverage(), n);
        }
    }

    #[test]
    fn short_instance_is_one_path() {
        let inst = generate(4, 7, 0.0, 0, 0).unwrap();
        assert_eq!(inst.planted_paths.len(), 1);
        assert_eq!(inst.planted_paths[0].order(), 7);
        assert_eq!(inst.graph.edge_count(), 6);
    }

    #[test]
    fn density_extremes() {
        let inst = generate(4, 50, 0.0, 1, 0).unwrap();
        assert_eq!(inst.graph.edge_count(), 50 - inst.planted_paths.len());
        let inst = generate(4, 50, 1.0, 0, 0).unwrap();
        assert_eq!(inst.graph.edge_count(), 50 * 49 / 2);
    }

    #[test]
    fn deterministic_and_keyed() {
        let a = generate(4, 40, 0.02, 5, 9).unwrap();
        assert_eq!(a, generate(4, 40, 0.02, 5, 9).unwrap());
        assert_ne!(a.graph, generate(4, 40, 0.02, 6, 9).unwrap().graph);
        assert_ne!(a.graph, generate(4, 40, 0.02, 5, 10).unwrap().graph);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate(4, 3, 0.0, 0, 0).is_err());
        assert!(generate(3, 10, 0.0, 0, 0).is_err());
        assert!(generate(4, 10, 1.5, 0, 0).is_err());
        assert!(generate(4, 10, f64::NAN, 0, 0).is_err());
    }
}
