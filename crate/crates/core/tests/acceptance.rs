//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pathcover::bench::{aggregate, run_grid, write_records, GridSpec, InstanceSet};
use pathcover::instances::{approx1_tight_fixture, approx2_lower_bound_fixture, generate};
use pathcover::ops::{
    find_add, find_double_rep, find_double_rep_with, find_lookahead, find_recover, find_rep, DoubleRepConfig,
};
use pathcover::solvers::{exact_max_cover, exact_max_cover_with_limit, next_move, solve, theoretical_ratio};
use pathcover::{validate_cover, Algorithm};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn approx1_tight_fixture_criterion() -> Outcome {
    let start = Instant::now();
    let (inst, stuck) = approx1_tight_fixture();
    let g = &inst.graph;
    ensure(validate_cover(g, &stuck).is_empty(), || "stuck cover is invalid".into())?;
    let (opt, best) = exact_max_cover_with_limit(g, 4, 24).map_err(|e| e.to_string())?;
    ensure(opt == 24, || format!("exact optimum {opt}, expected 24"))?;
    ensure(validate_cover(g, &best).is_empty() && best.coverage() == 24, || "oracle cover is invalid".into())?;
    ensure(find_add(g, &stuck).is_none(), || "Add applies".into())?;
    ensure(find_rep(g, &stuck).is_none(), || "Rep applies".into())?;
    ensure(find_double_rep(g, &stuck).is_none(), || "DoubleRep applies".into())?;
    ensure(find_double_rep_with(g, &stuck, DoubleRepConfig { prune: false }).is_none(), || {
        "unpruned DoubleRep applies".into()
    })?;
    let covered = stuck.coverage();
    ensure(covered == 10 && opt * 5 == covered * 12, || format!("ratio {opt}/{covered} is not 12/5"))?;
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("opt 24, stuck cover 10, ratio 12/5, {t:.2?}"))
}

fn approx2_lower_bound_fixture_criterion() -> Outcome {
    let start = Instant::now();
    let (inst, stuck) = approx2_lower_bound_fixture();
    let g = &inst.graph;
    ensure(validate_cover(g, &stuck).is_empty(), || "stuck cover is invalid".into())?;
    ensure(find_add(g, &stuck).is_none(), || "Add applies".into())?;
    ensure(find_rep(g, &stuck).is_none(), || "Rep applies".into())?;
    ensure(find_double_rep(g, &stuck).is_none(), || "DoubleRep applies".into())?;
    ensure(find_recover(g, &stuck).map_err(|e| e.to_string())?.is_none(), || "Re-cover applies".into())?;
    ensure(find_lookahead(g, &stuck).map_err(|e| e.to_string())?.is_none(), || "Look-ahead applies".into())?;
    let covered = stuck.coverage();
    ensure(covered == 18 && g.n() * 9 == covered * 16, || format!("ratio {}/{covered} is not 16/9", g.n()))?;
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("stuck cover 18 of 32, ratio 16/9, {t:.2?}"))
}

fn oracle_ratio_k4() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let (mut worst1, mut worst2) = (1.0f64, 1.0f64);
    for n in 8..=16 {
        for d in [0.0, 0.05, 0.1, 0.2] {
            for i in 0..14 {
                let inst = generate(4, n, d, i, 2024).map_err(|e| e.to_string())?;
                let (opt, _) = exact_max_cover(&inst.graph, 4).map_err(|e| e.to_string())?;
                let a1 = solve(&inst.graph, 4, Algorithm::Approx1).map_err(|e| e.to_string())?.covered;
                let a2 = solve(&inst.graph, 4, Algorithm::Approx2).map_err(|e| e.to_string())?.covered;
                let key = format!("n={n} d={d} i={i}");
                ensure(opt == n, || format!("{key}: oracle {opt} below planted {n}"))?;
                ensure(opt * 5 <= 12 * a1, || format!("{key}: exact {opt} vs approx1 {a1} exceeds 12/5"))?;
                ensure(opt <= 2 * a2, || format!("{key}: exact {opt} vs approx2 {a2} exceeds 2"))?;
                worst1 = worst1.max(opt as f64 / a1 as f64);
                worst2 = worst2.max(opt as f64 / a2 as f64);
                count += 1;
            }
        }
    }
    ensure(count >= 500, || format!("only {count} instances"))?;
    let t = within(start, Duration::from_secs(600))?;
    Ok(format!("{count} instances, worst approx1 {worst1:.4}, worst approx2 {worst2:.4}, {t:.2?}"))
}

fn oracle_ratio_k5() -> Outcome {
    let start = Instant::now();
    let bound = theoretical_ratio(5).map_err(|e| e.to_string())?;
    let mut count = 0;
    let mut worst = 1.0f64;
    for n in 10..=16 {
        for d in [0.0, 0.05, 0.1, 0.2] {
            for i in 0..8 {
                let inst = generate(5, n, d, i, 2024).map_err(|e| e.to_string())?;
                let (opt, _) = exact_max_cover(&inst.graph, 5).map_err(|e| e.to_string())?;
                let a1 = solve(&inst.graph, 5, Algorithm::Approx1).map_err(|e| e.to_string())?.covered;
                let key = format!("n={n} d={d} i={i}");
                ensure(opt as f64 <= bound * a1 as f64, || {
                    format!("{key}: exact {opt} vs approx1 {a1} exceeds {bound}")
                })?;
                worst = worst.max(opt as f64 / a1 as f64);
                count += 1;
            }
        }
    }
    ensure(count >= 200, || format!("only {count} instances"))?;
    let t = within(start, Duration::from_secs(600))?;
    Ok(format!("{count} instances, worst {worst:.4} <= {bound:.4}, {t:.2?}"))
}

fn zero_density_optimal() -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    for k in [4, 8] {
        for n in [50, 100] {
            for i in 0..20 {
                let inst = generate(k, n, 0.0, i, 7).map_err(|e| e.to_string())?;
                // approx2 is defined for k = 4 only
                let algs: &[Algorithm] =
                    if k == 4 { &[Algorithm::Approx1, Algorithm::Approx2] } else { &[Algorithm::Approx1] };
                for &alg in algs {
                    let r = solve(&inst.graph, k, alg).map_err(|e| e.to_string())?;
                    ensure(r.covered == n, || format!("k={k} n={n} i={i} {alg}: covered {} of {n}", r.covered))?;
                    runs += 1;
                }
            }
        }
    }
    let t = within(start, Duration::from_secs(600))?;
    Ok(format!("{runs} runs all cover every vertex, {t:.2?}"))
}

fn fixed_point_soundness() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for i in 0..200u64 {
        let (k, algs): (usize, &[Algorithm]) =
            if i % 4 == 3 { (5, &[Algorithm::Approx1]) } else { (4, &[Algorithm::Approx1, Algorithm::Approx2]) };
        let n = 8 + (i as usize % 9);
        let d = [0.05, 0.1, 0.2, 0.3][(i / 9) as usize % 4];
        let inst = generate(k, n, d, i, 99).map_err(|e| e.to_string())?;
        let g = &inst.graph;
        for &alg in algs {
            let r = solve(g, k, alg).map_err(|e| e.to_string())?;
            let key = format!("instance {i} (k={k} n={n} d={d}) {alg}");
            ensure(validate_cover(g, &r.cover).is_empty(), || format!("{key}: invalid cover"))?;
            ensure(next_move(g, &r.cover, alg).map_err(|e| e.to_string())?.is_none(), || {
                format!("{key}: a move still applies")
            })?;
            ensure(!common::free_path_exists(g, &r.cover, k), || format!("{key}: free {k}-path left"))?;
            if let Some((v, dist, e)) = common::rep_fixed_point_violation(g, &r.cover) {
                return Err(format!("{key}: extension of order {e} at vertex {v} at distance {dist} from an end"));
            }
            ensure(find_double_rep_with(g, &r.cover, DoubleRepConfig { prune: false }).is_none(), || {
                format!("{key}: unpruned DoubleRep applies")
            })?;
        }
        count += 1;
    }
    let t = within(start, Duration::from_secs(600))?;
    Ok(format!("{count} instances re-searched exhaustively, {t:.2?}"))
}

fn masked_csv(spec: &GridSpec) -> Result<String, String> {
    let records = run_grid(spec).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    write_records(&records, &mut buf).map_err(|e| e.to_string())?;
    let text = String::from_utf8(buf).map_err(|e| e.to_string())?;
    Ok(text.lines().map(|l| l.rsplit_once(',').map_or(l, |(head, _)| head)).collect::<Vec<_>>().join("\n"))
}

fn determinism() -> Outcome {
    let start = Instant::now();
    let spec = GridSpec {
        k: vec![4],
        n: vec![20, 40, 60],
        d: vec![0.0, 0.01, 0.05, 0.1],
        instances: InstanceSet::Count(6),
        algorithms: vec![Algorithm::Approx1, Algorithm::Approx2],
        master_seed: 31,
    };
    let a = masked_csv(&spec)?;
    let b = masked_csv(&spec)?;
    ensure(a == b, || "record CSVs differ".into())?;
    let rows = a.lines().count() - 1;
    ensure(rows == 3 * 4 * 6 * 2, || format!("{rows} rows"))?;
    let t = within(start, Duration::from_secs(600))?;
    Ok(format!("{rows} rows identical across two runs, {t:.2?}"))
}

fn peak_reproduction() -> Outcome {
    let start = Instant::now();
    let spec = GridSpec {
        k: vec![4],
        n: vec![50, 100],
        d: (0..=20).map(|i| i as f64 / 1000.0).collect(),
        instances: InstanceSet::Count(20),
        algorithms: vec![Algorithm::Approx1, Algorithm::Approx2],
        master_seed: 0,
    };
    let rows = aggregate(&run_grid(&spec).map_err(|e| e.to_string())?);
    let mut notes = Vec::new();
    for n in [50usize, 100] {
        let (lo, hi) = (1.0 / (2.0 * n as f64), 2.0 / n as f64);
        for alg in [Algorithm::Approx1, Algorithm::Approx2] {
            let curve: Vec<_> = rows.iter().filter(|r| r.n == n && r.alg == alg).collect();
            let peak = curve.iter().max_by(|a, b| a.mean_ratio.total_cmp(&b.mean_ratio)).unwrap();
            ensure(peak.d >= lo - 1e-12 && peak.d <= hi + 1e-12, || {
                format!("n={n} {alg}: peak at d={} outside [{lo}, {hi}]", peak.d)
            })?;
            notes.push(format!("n={n} {alg} peak d={}", peak.d));
        }
        for r1 in rows.iter().filter(|r| r.n == n && r.alg == Algorithm::Approx1) {
            let r2 = rows.iter().find(|r| r.n == n && r.d == r1.d && r.alg == Algorithm::Approx2).unwrap();
            ensure(r2.mean_ratio <= r1.mean_ratio, || {
                format!("n={n} d={}: approx2 mean {} above approx1 {}", r1.d, r2.mean_ratio, r1.mean_ratio)
            })?;
        }
    }
    let t = within(start, Duration::from_secs(1800))?;
    Ok(format!("{}; approx2 <= approx1 at every d, {t:.2?}", notes.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("tight approx1 fixture: opt 24, stuck at 10, ratio 12/5", approx1_tight_fixture_criterion),
        ("approx2 lower-bound fixture: stuck at 18 of 32, ratio 16/9", approx2_lower_bound_fixture_criterion),
        ("k=4 oracle ratio: approx1 <= 12/5, approx2 <= 2", oracle_ratio_k4),
        ("k=5 oracle ratio: approx1 <= theoretical bound", oracle_ratio_k5),
        ("d=0 instances are solved optimally", zero_density_optimal),
        ("fixed points survive exhaustive re-search", fixed_point_soundness),
        ("bench CSV is deterministic (elapsed masked)", determinism),
        ("mean-ratio peak near d=1/n, approx2 <= approx1", peak_reproduction),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name} ({detail})"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
