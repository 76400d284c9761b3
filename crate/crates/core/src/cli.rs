//! Command-line front end: `gen`, `solve`, `exact`, `bench`, `fixtures`.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use pathcover::bench::{aggregate, run_grid, write_aggregate, write_records, GridSpec};
use pathcover::instances::{
    approx1_tight_fixture, approx2_lower_bound_fixture, generate, metadata_path, save_instance, InstanceMetadata,
};
use pathcover::solvers::{exact_max_cover_with_limit, solve_from, Algorithm, OpCounts, DEFAULT_EXACT_LIMIT};
use pathcover::{Cover, Graph};

#[derive(Parser)]
#[command(name = "pathcover", version, about = "Cover graph vertices with vertex-disjoint long paths")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a planted instance and write PREFIX.graph and PREFIX.json.
    Gen {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: f64,
        #[arg(long)]
        i: u64,
        /// Master seed mixed into the instance key.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output prefix (default: k<K>-n<N>-d<D>-i<I> in the current directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run approx1 or approx2 on a graph file.
    Solve {
        #[arg(long)]
        alg: Algorithm,
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Graph file; a PREFIX.json sidecar next to it is used for the ratio.
        #[arg(long = "in")]
        input: PathBuf,
        /// Start from this cover (one path per line) instead of the empty cover.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Print the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compute the optimum coverage exactly (small graphs only).
    Exact {
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
        /// Largest accepted vertex count (at most 24).
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
        /// Also write an optimal cover to this file.
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Run a JSON grid spec and write per-run records as CSV.
    Bench {
        #[arg(long)]
        grid: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write per-(k, n, d, alg) summary rows.
        #[arg(long)]
        aggregate: Option<PathBuf>,
    },
    /// Write the two built-in worst-case instances with their stuck covers.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct SolveReport<'a> {
    alg: Algorithm,
    k: usize,
    n: usize,
    covered: usize,
    opt: Option<usize>,
    ratio: Option<f64>,
    op_counts: OpCounts,
    iterations: usize,
    elapsed_ms: f64,
    paths: &'a [pathcover::Path],
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { k, n, d, i, seed, out } => {
            let inst = generate(k, n, d, i, seed)?;
            let prefix = out.unwrap_or_else(|| PathBuf::from(format!("k{k}-n{n}-d{d}-i{i}")));
            save_instance(&inst, &prefix).with_context(|| format!("writing {}", prefix.display()))?;
            println!("n={}", inst.graph.n());
            println!("edges={}", inst.graph.edge_count());
        }
        Command::Solve { alg, k, input, resume, json } => {
            if alg == Algorithm::Approx2 && k != 4 {
                bail!("approx2 requires --k 4 (got {k})");
            }
            let g = Graph::load(&input).with_context(|| format!("reading {}", input.display()))?;
            let meta = read_metadata(&input, &g)?;
            let start = match resume {
                Some(path) => {
                    let f = File::open(&path).with_context(|| format!("reading {}", path.display()))?;
                    Cover::read_text(k, BufReader::new(f))?
                }
                None => Cover::new(k),
            };
            let r = solve_from(&g, start, alg)?;
            let opt = meta.map(|m| m.n);
            let ratio = opt.map(|o| if r.covered == 0 { f64::INFINITY } else { o as f64 / r.covered as f64 });
            let report = SolveReport {
                alg,
                k,
                n: g.n(),
                covered: r.covered,
                opt,
                ratio,
                op_counts: r.op_counts,
                iterations: r.iterations,
                elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
                paths: r.cover.paths(),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_report(&report);
            }
        }
        Command::Exact { k, input, limit, cover } => {
            let g = Graph::load(&input).with_context(|| format!("reading {}", input.display()))?;
            let (best, c) = exact_max_cover_with_limit(&g, k, limit)?;
            println!("optimum={best}");
            if let Some(path) = cover {
                write_file(&path, |w| Ok(c.write_text(w)?))?;
            }
        }
        Command::Bench { grid, out, aggregate: agg } => {
            let text = fs::read_to_string(&grid).with_context(|| format!("reading {}", grid.display()))?;
            let spec = GridSpec::from_json(&text)?;
            let records = run_grid(&spec)?;
            write_file(&out, |w| Ok(write_records(&records, w)?))?;
            if let Some(path) = agg {
                write_file(&path, |w| Ok(write_aggregate(&aggregate(&records), w)?))?;
            }
            println!("records={}", records.len());
        }
        Command::Fixtures { out } => {
            fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            for (name, (inst, stuck)) in
                [("approx1_tight", approx1_tight_fixture()), ("approx2_lower_bound", approx2_lower_bound_fixture())]
            {
                let prefix = out.join(name);
                save_instance(&inst, &prefix)?;
                write_file(&prefix.with_extension("cover"), |w| Ok(stuck.write_text(w)?))?;
                println!("{}", prefix.display());
            }
        }
    }
    Ok(())
}

fn read_metadata(graph_path: &Path, g: &Graph) -> Result<Option<InstanceMetadata>> {
    let path = metadata_path(graph_path);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let meta: InstanceMetadata =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    meta.check_against(g)?;
    Ok(Some(meta))
}

fn write_file(path: &Path, f: impl FnOnce(&mut BufWriter<File>) -> Result<()>) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    f(&mut w)?;
    w.flush()?;
    Ok(())
}

fn print_report(r: &SolveReport<'_>) {
    println!("alg={}", r.alg);
    println!("covered={}", r.covered);
    if let (Some(opt), Some(ratio)) = (r.opt, r.ratio) {
        println!("opt={opt}");
        println!("ratio={}", if ratio.is_infinite() { "inf".to_string() } else { format!("{ratio:?}") });
    }
    let c = &r.op_counts;
    println!(
        "adds={} reps={} double_reps={} recovers={} lookaheads={}",
        c.add, c.rep, c.double_rep, c.recover, c.lookahead
    );
    println!("paths={}", r.paths.len());
}
