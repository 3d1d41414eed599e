//! Acceptance run: 200 seeded instances, n = 60 in the unit square, r = 0.25,
//! q in {r, 0.8r, 0.5r}. Prints one line per criterion and exits non-zero if
//! any criterion fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use coordfree_alpha::collapse::{verify_with_range, EquivalenceReport};
use coordfree_alpha::commands::{cmd_collapse, cmd_generate, cmd_render, cmd_shape, cmd_verify, RunConfig};
use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::geometry::DEFAULT_EPSILON;

const SEEDS: u64 = 200;
const N: usize = 60;
const RANGE: f64 = 0.25;
const EPSILON: f64 = DEFAULT_EPSILON;
const TIME_LIMIT: Duration = Duration::from_secs(1);

struct Run {
    seed: u64,
    report: EquivalenceReport,
    elapsed: Duration,
}

struct Criterion {
    passed: bool,
    detail: String,
}

fn criterion(passed: bool, detail: impl Into<String>) -> Criterion {
    Criterion { passed, detail: detail.into() }
}

fn batch() -> Vec<Run> {
    let mut runs = Vec::new();
    for seed in 1..=SEEDS {
        let config = GeneratorConfig { seed, n: N, epsilon: EPSILON, ..Default::default() };
        let ps = generate_points(&config).expect("generation succeeds").points;
        for q in [RANGE, 0.8 * RANGE, 0.5 * RANGE] {
            let start = Instant::now();
            let report = verify_with_range(&ps, RANGE, q);
            runs.push(Run { seed, report, elapsed: start.elapsed() });
        }
    }
    runs
}

/// Runs where any of `checks` is missing or failed, as `seed/q:check` labels.
fn violations(runs: &[&Run], checks: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for run in runs {
        for name in checks {
            match run.report.check(name) {
                Some(c) if c.passed => {}
                Some(c) => out.push(format!(
                    "seed {} q {}: {name} {}",
                    run.seed,
                    run.report.q,
                    c.detail.clone().unwrap_or_default()
                )),
                None => out.push(format!(
                    "seed {} q {}: {name} not evaluated {:?}",
                    run.seed, run.report.q, run.report.errors
                )),
            }
        }
    }
    out
}

fn summarize(label: &str, total: usize, found: Vec<String>) -> Criterion {
    let mut detail = format!("{label}: {} violations over {total} runs", found.len());
    for v in found.iter().take(5) {
        detail.push_str(&format!("\n      {v}"));
    }
    criterion(found.is_empty(), detail)
}

fn oracle_equivalence(runs: &[Run]) -> Criterion {
    let clean: Vec<&Run> = runs.iter().filter(|r| !r.report.degenerate).collect();
    let skipped = runs.len() - clean.len();
    let found = violations(&clean, &["local_matches_oracle"]);
    let slowest = runs.iter().map(|r| r.elapsed).max().unwrap_or_default();
    let fast = slowest < TIME_LIMIT;
    criterion(
        found.is_empty() && fast && !clean.is_empty(),
        format!(
            "{}/{} non-degenerate runs agree, {skipped} degenerate skipped, slowest run {:.3} s (limit {:.0} s){}",
            clean.len() - found.len(),
            clean.len(),
            slowest.as_secs_f64(),
            TIME_LIMIT.as_secs_f64(),
            found.first().map(|v| format!("\n      {v}")).unwrap_or_default()
        ),
    )
}

fn svg_layers(path: &Path, layers: &[&str]) -> Result<(), String> {
    let svg = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    for layer in layers {
        if !svg.contains(&format!("id=\"{layer}\"")) {
            return Err(format!("{} lacks layer {layer}", path.display()));
        }
    }
    Ok(())
}

fn config(out: PathBuf) -> RunConfig {
    RunConfig { seed: 1, n: N, r: RANGE, epsilon: EPSILON, out, batch: 3, ..Default::default() }
}

fn figures(runs: &[Run], dir: &Path) -> Criterion {
    let all: Vec<&Run> = runs.iter().collect();
    let nested = violations(&all, &["nesting_alpha_in_delaunay_cech"]);
    let mut problems = Vec::new();
    let shape_dir = dir.join("shape");
    let verify_dir = dir.join("verify");
    match cmd_shape(&RunConfig { q: Some(0.2), ..config(shape_dir.clone()) }) {
        Ok(o) if o.passed => {}
        Ok(o) => problems.push(format!("shape: {}", o.summary)),
        Err(e) => problems.push(format!("shape: {e}")),
    }
    match cmd_verify(&config(verify_dir.clone())) {
        Ok(o) if o.passed => {}
        Ok(o) => problems.push(format!("verify: {}", o.summary)),
        Err(e) => problems.push(format!("verify: {e}")),
    }
    for (path, layers) in [
        (shape_dir.join("shape.svg"), &["disks", "alpha", "boundary", "vertices"][..]),
        (verify_dir.join("verify_seed_1.svg"), &["disks", "delaunay-cech", "alpha", "vertices"][..]),
    ] {
        if let Err(e) = svg_layers(&path, layers) {
            problems.push(e);
        }
    }
    let passed = nested.is_empty() && problems.is_empty();
    let mut detail = format!(
        "shape and verify SVGs carry disk, alpha and Delaunay-Cech layers; alpha inside Delaunay-Cech on {}/{} runs",
        runs.len() - nested.len(),
        runs.len()
    );
    for p in problems.iter().chain(&nested).take(5) {
        detail.push_str(&format!("\n      {p}"));
    }
    criterion(passed, detail)
}

fn snapshot(dir: &Path) -> Vec<(PathBuf, Vec<u8>)> {
    let mut files = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                files.push((path.strip_prefix(dir).unwrap().to_path_buf(), fs::read(&path).unwrap()));
            }
        }
    }
    files.sort();
    files
}

fn determinism(dir: &Path) -> Criterion {
    let pass = |k: usize| -> Result<Vec<(PathBuf, Vec<u8>)>, String> {
        let root = dir.join(format!("run{k}"));
        let sub = |name: &str| config(root.join(name));
        cmd_generate(&sub("generate")).map_err(|e| e.to_string())?;
        cmd_shape(&sub("shape")).map_err(|e| e.to_string())?;
        cmd_verify(&RunConfig { batch: 8, ..sub("verify") }).map_err(|e| e.to_string())?;
        cmd_collapse(&sub("collapse")).map_err(|e| e.to_string())?;
        cmd_render(&sub("render")).map_err(|e| e.to_string())?;
        Ok(snapshot(&root))
    };
    match (pass(0), pass(1)) {
        (Ok(a), Ok(b)) => {
            let differing: Vec<String> =
                a.iter().zip(&b).filter(|(x, y)| x != y).map(|(x, _)| x.0.display().to_string()).collect();
            let same = a.len() == b.len() && differing.is_empty();
            criterion(
                same,
                format!(
                    "{} output files compared across two runs, {} differ {:?}",
                    a.len(),
                    differing.len(),
                    differing
                ),
            )
        }
        (Err(e), _) | (_, Err(e)) => criterion(false, format!("command failed: {e}")),
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let runs = batch();
    let all: Vec<&Run> = runs.iter().collect();
    let scratch = tempfile::tempdir().expect("temporary directory");

    let results = [
        ("1 oracle equivalence", oracle_equivalence(&runs)),
        (
            "2 membership rules",
            summarize(
                "triangle and edge membership rules",
                runs.len(),
                violations(
                    &all,
                    &[
                        "triangle_membership_by_circumradius",
                        "midpoint_witness_iff_no_obtuse",
                        "edge_membership_rule",
                        "at_most_one_obtuse_triangle",
                        "alpha_matches_nerve_definition",
                    ],
                ),
            ),
        ),
        (
            "3 pairing and collapse",
            summarize(
                "pairing bijective, free steps, end on alpha, equal Betti numbers",
                runs.len(),
                violations(
                    &all,
                    &[
                        "pairing_bijective",
                        "collapse_steps_free",
                        "collapse_ends_on_alpha",
                        "trace_length_eq_pairing",
                        "betti_delaunay_cech_eq_alpha",
                    ],
                ),
            ),
        ),
        (
            "4 nesting chain",
            summarize(
                "alpha in DC in U in DT, Cech in flag, closure",
                runs.len(),
                violations(
                    &all,
                    &[
                        "nesting_alpha_in_delaunay_cech",
                        "nesting_delaunay_cech_in_u",
                        "nesting_u_in_delaunay",
                        "nesting_cech_in_flag",
                        "complexes_closed",
                    ],
                ),
            ),
        ),
        (
            "5 nerve consistency",
            summarize(
                "b0 = components, b1 = Cech b1",
                runs.len(),
                violations(&all, &["nerve_b0_eq_components", "nerve_b1_eq_cech"]),
            ),
        ),
        ("6 locality audit", {
            let reads: usize = runs.iter().filter_map(|r| r.report.locality_reads).sum();
            let mut c = summarize(
                "reads outside the closed neighborhoods",
                runs.len(),
                violations(&all, &["locality", "distributed_matches_local"]),
            );
            c.detail.push_str(&format!(" ({reads} distance reads audited)"));
            c
        }),
        ("7 figures", figures(&runs, &scratch.path().join("figures"))),
        ("8 determinism", determinism(&scratch.path().join("determinism"))),
    ];

    println!(
        "acceptance: {SEEDS} seeds x 3 parameters, n = {N}, r = {RANGE}, margin {EPSILON:e} ({:.1} s)",
        started.elapsed().as_secs_f64()
    );
    let mut all_passed = true;
    for (name, c) in &results {
        all_passed &= c.passed;
        println!("criterion {name}: {} - {}", if c.passed { "PASS" } else { "FAIL" }, c.detail);
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
