//! Instance files: `PREFIX.graph` in the graph text format plus a JSON
//! sidecar `PREFIX.json` with the generation key and the planted paths.

use std::fs;
use std::io::BufWriter;
use std::path::{Path as FsPath, PathBuf};

use serde::{Deserialize, Serialize};

use super::Instance;
use crate::cover::Path;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceMetadata {
    pub k: usize,
    pub n: usize,
    pub d: f64,
    pub i: u64,
    pub master_seed: u64,
    #[serde(default)]
    pub planted_paths: Vec<Path>,
}

impl InstanceMetadata {
    /// Checks the metadata against `g`: vertex count, and that the planted
    /// paths are vertex-disjoint paths of `g`.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.n != g.n() {
            return Err(Error::Metadata(format!("metadata has n = {} but the graph has {} vertices", self.n, g.n())));
        }
        let mut seen = vec![false; g.n()];
        for p in &self.planted_paths {
            if let Some(&v) = p.vertices().iter().find(|&&v| v >= g.n()) {
                return Err(Error::Metadata(format!("planted path {p} has vertex {v} out of range")));
            }
            if let Some(w) = p.vertices().windows(2).find(|w| !g.adjacent(w[0], w[1])) {
                return Err(Error::Metadata(format!("planted edge {}-{} is not in the graph", w[0], w[1])));
            }
            for &v in p.vertices() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Metadata(format!("vertex {v} is on two planted paths")));
                }
            }
        }
        Ok(())
    }
}

impl From<&Instance> for InstanceMetadata {
    fn from(inst: &Instance) -> Self {
        InstanceMetadata {
            k: inst.k,
            n: inst.n,
            d: inst.d,
            i: inst.index,
            master_seed: inst.master_seed,
            planted_paths: inst.planted_paths.clone(),
        }
    }
}

fn strip_graph_ext(path: &FsPath) -> PathBuf {
    if path.extension().is_some_and(|e| e == "graph") {
        path.with_extension("")
    } else {
        path.to_path_buf()
    }
}

fn with_suffix(prefix: &FsPath, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

/// Sidecar metadata file for a graph file or prefix.
pub fn metadata_path(path: impl AsRef<FsPath>) -> PathBuf {
    with_suffix(&strip_graph_ext(path.as_ref()), "json")
}

/// Writes `PREFIX.graph` and `PREFIX.json`.
pub fn save_instance(inst: &Instance, prefix: impl AsRef<FsPath>) -> Result<()> {
    let prefix = strip_graph_ext(prefix.as_ref());
    inst.graph.save(with_suffix(&prefix, "graph"))?;
    let file = fs::File::create(with_suffix(&prefix, "json"))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, &InstanceMetadata::from(inst))?;
    std::io::Write::write_all(&mut w, b"\n")?;
    Ok(())
}

/// Reads an instance from `PREFIX` or `PREFIX.graph`; both files must exist.
pub fn load_instance(path: impl AsRef<FsPath>) -> Result<Instance> {
    let prefix = strip_graph_ext(path.as_ref());
    let graph = Graph::load(with_suffix(&prefix, "graph"))?;
    let meta: InstanceMetadata = serde_json::from_slice(&fs::read(with_suffix(&prefix, "json"))?)?;
    meta.check_against(&graph)?;
    Ok(Instance {
        graph,
        k: meta.k,
        n: meta.n,
        d: meta.d,
        index: meta.i,
        master_seed: meta.master_seed,
        planted_paths: meta.planted_paths,
    })
}
