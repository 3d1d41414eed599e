//! Drivers behind the command-line tool. Each command reads a [`RunConfig`],
//! writes its artifacts under `out`, and reports whether every property it
//! checked held. Outputs carry no timings, so reruns are byte-identical.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::collapse::{collapse_to_alpha, verify_with_range, Check, EquivalenceReport};
use crate::complex::{BettiPair, Edge};
use crate::complexes::{alpha_complex, delaunay_cech};
use crate::error::CollapseError;
use crate::generate::{generate_points, Domain, GeneratorConfig, Perturbation};
use crate::geometry::{PointSet, DEFAULT_EPSILON};
use crate::graph::{DistanceGraph, LocalDistances};
use crate::io::{parse_edge_list, parse_points, write_edge_list, write_points};
use crate::local::{alpha_shape_local, LocalShape, Reason, Verdict};
use crate::svg::{equivalence_svg, shape_svg};

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub n: usize,
    pub r: f64,
    /// Alpha parameter; defaults to `r`, and `verify` sweeps `r`, `0.8r`,
    /// `0.5r` when unset.
    pub q: Option<f64>,
    pub epsilon: f64,
    pub domain: Domain,
    pub out: PathBuf,
    pub batch: usize,
    pub points: Option<PathBuf>,
    pub edges: Option<PathBuf>,
    pub inject_degeneracy: bool,
    /// Perturb the oracle before comparison. Used to check that the harness
    /// notices a disagreement.
    pub inject_fault: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 1,
            n: 60,
            r: 0.25,
            q: None,
            epsilon: DEFAULT_EPSILON,
            domain: Domain::default(),
            out: PathBuf::from("out"),
            batch: 1,
            points: None,
            edges: None,
            inject_degeneracy: false,
            inject_fault: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.r.is_finite() && self.r > 0.0) {
            return Err(CliError::Usage(format!("--r must be positive, got {}", self.r)));
        }
        if let Some(q) = self.q {
            if !(q.is_finite() && q > 0.0) {
                return Err(CliError::Usage(format!("--q must be positive, got {q}")));
            }
            if q > self.r {
                return Err(CliError::Usage(format!("--q {q} exceeds --r {}", self.r)));
            }
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(CliError::Usage(format!("--epsilon must be positive, got {}", self.epsilon)));
        }
        if self.points.is_some() && self.edges.is_some() {
            return Err(CliError::Usage("--points and --edges are mutually exclusive".into()));
        }
        Ok(())
    }

    pub fn q(&self) -> f64 {
        self.q.unwrap_or(self.r)
    }

    fn generator(&self, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            seed,
            n: self.n,
            domain: self.domain,
            epsilon: self.epsilon,
            inject_degeneracy: self.inject_degeneracy,
            ..Default::default()
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Files written by a command and whether its checks held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub files: Vec<PathBuf>,
    pub passed: bool,
    pub summary: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

struct Writer {
    dir: PathBuf,
    files: Vec<PathBuf>,
}

impl Writer {
    fn new(dir: &Path) -> Result<Self, CliError> {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
        Ok(Writer { dir: dir.to_path_buf(), files: Vec::new() })
    }

    fn text(&mut self, name: &str, contents: &str) -> Result<PathBuf, CliError> {
        let path = self.dir.join(name);
        write_atomic(&path, contents)?;
        self.files.push(path.clone());
        Ok(path)
    }

    fn json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<PathBuf, CliError> {
        let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
        text.push('\n');
        self.text(name, &text)
    }

    fn finish(self, passed: bool, summary: String) -> Outcome {
        Outcome { files: self.files, passed, summary }
    }
}

/// Write to a sibling temporary file, then rename over the target.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("out");
    let tmp = path.with_file_name(format!(".{name}.tmp"));
    fs::write(&tmp, contents).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_points(path: &Path, epsilon: f64) -> Result<PointSet, CliError> {
    parse_points(&read(path)?, epsilon).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_edges(path: &Path, epsilon: f64) -> Result<DistanceGraph, CliError> {
    parse_edge_list(&read(path)?, epsilon).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// The point file if one was given, otherwise the seeded instance.
fn instance(config: &RunConfig, seed: u64) -> Result<(PointSet, Vec<Perturbation>), CliError> {
    match &config.points {
        Some(path) => Ok((load_points(path, config.epsilon)?, Vec::new())),
        None => generate_points(&config.generator(seed))
            .map(|g| (g.points, g.perturbations))
            .map_err(|e| CliError::Input(format!("seed {seed}: {e}"))),
    }
}

fn require_points(config: &RunConfig, command: &str) -> Result<(), CliError> {
    if config.edges.is_some() {
        return Err(CliError::Usage(format!("{command} needs coordinates; use --points or a seed")));
    }
    Ok(())
}

#[derive(Serialize)]
struct GenerateRecord<'a> {
    seed: u64,
    n: usize,
    r: f64,
    epsilon: f64,
    domain: Domain,
    edges_within_r: usize,
    perturbations: &'a [Perturbation],
}

/// Writes `points.txt`, the matching `edges.txt` at range `r`, and a JSON
/// log of perturbations.
pub fn cmd_generate(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let generated = generate_points(&config.generator(config.seed)).map_err(|e| CliError::Input(e.to_string()))?;
    let graph = DistanceGraph::build(&generated.points, config.r).map_err(|e| CliError::Input(e.to_string()))?;
    let mut w = Writer::new(&config.out)?;
    w.text("points.txt", &write_points(&generated.points))?;
    w.text("edges.txt", &write_edge_list(&graph))?;
    w.json(
        "generate.json",
        &GenerateRecord {
            seed: config.seed,
            n: config.n,
            r: config.r,
            epsilon: config.epsilon,
            domain: config.domain,
            edges_within_r: graph.edge_count(),
            perturbations: &generated.perturbations,
        },
    )?;
    let summary = format!("{} points, {} perturbations", generated.points.len(), generated.perturbations.len());
    Ok(w.finish(true, summary))
}

#[derive(Serialize)]
struct DecisionRecord {
    edge: Edge,
    verdict: Verdict,
    reason: Reason,
    evidence: Vec<usize>,
    near_degenerate: bool,
}

#[derive(Serialize)]
struct OracleDiff {
    boundary_edges: Vec<Edge>,
    missing: Vec<Edge>,
    extra: Vec<Edge>,
    vertices_agree: bool,
}

#[derive(Serialize)]
struct ShapeRecord {
    n: usize,
    r: f64,
    q: f64,
    input: &'static str,
    boundary_edges: Vec<Edge>,
    boundary_vertices: Vec<usize>,
    near_degenerate: bool,
    decisions: Vec<DecisionRecord>,
    oracle: Option<OracleDiff>,
}

fn shape_record(shape: &LocalShape, n: usize, r: f64, input: &'static str) -> ShapeRecord {
    ShapeRecord {
        n,
        r,
        q: shape.q,
        input,
        boundary_edges: shape.boundary_edges.iter().copied().collect(),
        boundary_vertices: shape.boundary_vertices.iter().copied().collect(),
        near_degenerate: shape.is_near_degenerate(),
        decisions: shape
            .decisions
            .values()
            .map(|d| DecisionRecord {
                edge: d.edge,
                verdict: d.verdict,
                reason: d.reason,
                evidence: d.evidence.clone(),
                near_degenerate: d.near_degenerate,
            })
            .collect(),
        oracle: None,
    }
}

/// Local alpha shape. With coordinates it is compared against the
/// Delaunay oracle and drawn; with an edge list only the JSON is written.
pub fn cmd_shape(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let mut w = Writer::new(&config.out)?;
    if let Some(path) = &config.edges {
        let graph = load_edges(path, config.epsilon)?;
        let r = graph.range();
        let q = config.q.unwrap_or(r);
        if q > r {
            return Err(CliError::Usage(format!("--q {q} exceeds the edge file range {r}")));
        }
        let shape = local_shape(&graph, q, path.display().to_string())?;
        w.json("shape.json", &shape_record(&shape, graph.n(), r, "edges"))?;
        let summary = format!("{} boundary edges (coordinate-free input)", shape.boundary_edges.len());
        return Ok(w.finish(true, summary));
    }

    let (ps, _) = instance(config, config.seed)?;
    let (r, q) = (config.r, config.q());
    let context = instance_context(config);
    let graph = DistanceGraph::build(&ps, r).map_err(|e| CliError::Input(e.to_string()))?;
    let shape = local_shape(&graph, q, context.clone())?;
    let alpha = alpha_complex(&ps, q).map_err(|e| CliError::Input(format!("{context}: {e}")))?;
    let oracle = alpha.boundary_shape();
    let diff = OracleDiff {
        boundary_edges: oracle.edges().iter().copied().collect(),
        missing: oracle.edges().difference(&shape.boundary_edges).copied().collect(),
        extra: shape.boundary_edges.difference(oracle.edges()).copied().collect(),
        vertices_agree: &shape.boundary_vertices == oracle.vertices(),
    };
    let passed =
        shape.is_near_degenerate() || (diff.missing.is_empty() && diff.extra.is_empty() && diff.vertices_agree);
    let summary = format!(
        "{} boundary edges, {} missing and {} extra against the oracle",
        shape.boundary_edges.len(),
        diff.missing.len(),
        diff.extra.len()
    );
    let mut record = shape_record(&shape, ps.len(), r, "points");
    record.oracle = Some(diff);
    w.json("shape.json", &record)?;
    w.text("shape.svg", &shape_svg(&ps, q, &shape.boundary_edges, Some(&alpha)))?;
    Ok(w.finish(passed, summary))
}

fn instance_context(config: &RunConfig) -> String {
    match &config.points {
        Some(path) => path.display().to_string(),
        None => format!("seed {}", config.seed),
    }
}

fn local_shape(graph: &DistanceGraph, q: f64, context: String) -> Result<LocalShape, CliError> {
    alpha_shape_local(graph, q).map_err(|e| CliError::Input(format!("{context}: {e}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunRecord {
    pub seed: Option<u64>,
    pub q: f64,
    pub status: Status,
    pub failed_checks: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
struct SeedRecord {
    seed: Option<u64>,
    perturbations: usize,
    generation_error: Option<String>,
    reports: Vec<EquivalenceReport>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchReport {
    pub n: usize,
    pub r: f64,
    pub qs: Vec<f64>,
    pub first_seed: u64,
    pub batch: usize,
    pub runs: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub fault_injected: bool,
    pub properties: BTreeMap<String, PropertyTally>,
    pub results: Vec<RunRecord>,
    pub failures: Vec<FailureRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub seed: Option<u64>,
    pub q: f64,
    pub check: String,
    pub detail: Option<String>,
}

fn status_of(report: &EquivalenceReport) -> Status {
    if report.degenerate {
        Status::Skipped
    } else if report.passed() {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Replace the oracle comparison with one against a boundary missing its
/// first edge.
fn inject_oracle_fault(report: &mut EquivalenceReport, ps: &PointSet) {
    let Ok(alpha) = alpha_complex(ps, report.q) else { return };
    let Ok(graph) = DistanceGraph::build(ps, report.range) else { return };
    let Ok(shape) = alpha_shape_local(&graph, report.q) else { return };
    let mut oracle: BTreeSet<Edge> = alpha.boundary_shape().edges().clone();
    let Some(&dropped) = oracle.iter().next() else { return };
    oracle.remove(&dropped);
    let extra: Vec<_> = shape.boundary_edges.difference(&oracle).collect();
    let missing: Vec<_> = oracle.difference(&shape.boundary_edges).collect();
    let check = Check {
        name: "local_matches_oracle".into(),
        passed: missing.is_empty() && extra.is_empty(),
        detail: Some(format!("missing {missing:?}, extra {extra:?}")),
    };
    report.checks.retain(|c| c.name != check.name);
    report.checks.push(check);
    report.degenerate = false;
}

fn verify_instance(
    config: &RunConfig,
    seed: Option<u64>,
    qs: &[f64],
) -> Result<(SeedRecord, Option<PointSet>), CliError> {
    let (ps, perturbations) = match instance(config, seed.unwrap_or(config.seed)) {
        Ok(found) => found,
        Err(CliError::Input(message)) if config.points.is_none() => {
            let record = SeedRecord { seed, perturbations: 0, generation_error: Some(message), reports: Vec::new() };
            return Ok((record, None));
        }
        Err(err) => return Err(err),
    };
    let reports = qs
        .iter()
        .map(|&q| {
            let mut report = verify_with_range(&ps, config.r, q);
            if config.inject_fault {
                inject_oracle_fault(&mut report, &ps);
            }
            report
        })
        .collect();
    let record = SeedRecord { seed, perturbations: perturbations.len(), generation_error: None, reports };
    Ok((record, Some(ps)))
}

/// Runs every equivalence check on `batch` seeded instances starting at
/// `seed` (or on the point file), for each `q`. Degenerate instances are
/// skipped and counted. The first instance is also drawn.
pub fn cmd_verify(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    require_points(config, "verify")?;
    let qs = match config.q {
        Some(q) => vec![q],
        None => vec![config.r, 0.8 * config.r, 0.5 * config.r],
    };
    let seeds: Vec<Option<u64>> = match config.points {
        Some(_) => vec![None],
        None => (0..config.batch as u64).map(|k| Some(config.seed + k)).collect(),
    };
    let mut w = Writer::new(&config.out)?;
    let seed_dir = config.out.join("seeds");
    let results: Vec<(SeedRecord, Option<PointSet>)> = seeds
        .par_iter()
        .map(|&seed| {
            let (record, ps) = verify_instance(config, seed, &qs)?;
            let name = match seed {
                Some(seed) => format!("seed_{seed:06}.json"),
                None => "points.json".to_string(),
            };
            Writer::new(&seed_dir)?.json(&name, &record)?;
            Ok((record, ps))
        })
        .collect::<Result<_, CliError>>()?;

    let mut batch = BatchReport {
        n: config.n,
        r: config.r,
        qs: qs.clone(),
        first_seed: config.seed,
        batch: seeds.len(),
        runs: 0,
        passed: 0,
        failed: 0,
        skipped: 0,
        fault_injected: config.inject_fault,
        properties: BTreeMap::new(),
        results: Vec::new(),
        failures: Vec::new(),
    };
    for (record, _) in &results {
        if let Some(message) = &record.generation_error {
            for &q in &qs {
                batch.runs += 1;
                batch.skipped += 1;
                let failed_checks = vec![format!("generation: {message}")];
                batch.results.push(RunRecord { seed: record.seed, q, status: Status::Skipped, failed_checks });
            }
        }
        for report in &record.reports {
            let status = status_of(report);
            batch.runs += 1;
            match status {
                Status::Pass => batch.passed += 1,
                Status::Fail => batch.failed += 1,
                Status::Skipped => batch.skipped += 1,
            }
            if status != Status::Skipped {
                for check in &report.checks {
                    let tally = batch.properties.entry(check.name.clone()).or_default();
                    if check.passed {
                        tally.passed += 1;
                    } else {
                        tally.failed += 1;
                    }
                }
            }
            let mut failed_checks: Vec<String> = report.failures().iter().map(|c| c.name.clone()).collect();
            failed_checks.extend(report.errors.iter().cloned());
            if status == Status::Fail {
                for check in report.failures() {
                    batch.failures.push(FailureRecord {
                        seed: record.seed,
                        q: report.q,
                        check: check.name.clone(),
                        detail: check.detail.clone(),
                    });
                }
                for error in &report.errors {
                    batch.failures.push(FailureRecord {
                        seed: record.seed,
                        q: report.q,
                        check: "error".into(),
                        detail: Some(error.clone()),
                    });
                }
            }
            batch.results.push(RunRecord { seed: record.seed, q: report.q, status, failed_checks });
        }
    }
    w.json("verify_report.json", &batch)?;
    w.files.extend(results.iter().map(|(record, _)| {
        seed_dir.join(match record.seed {
            Some(seed) => format!("seed_{seed:06}.json"),
            None => "points.json".to_string(),
        })
    }));

    if let Some((record, Some(ps))) = results.first() {
        let q = qs[0];
        if let (Ok(alpha), Ok(dc)) = (alpha_complex(ps, q), delaunay_cech(ps, q)) {
            let name = match record.seed {
                Some(seed) => format!("verify_seed_{seed}.svg"),
                None => "verify_points.svg".to_string(),
            };
            w.text(&name, &equivalence_svg(ps, q, &alpha, &dc))?;
        }
    }
    let mut summary =
        format!("{} runs: {} passed, {} failed, {} skipped", batch.runs, batch.passed, batch.failed, batch.skipped);
    for f in batch.failures.iter().take(20) {
        let seed = f.seed.map_or_else(|| "points".to_string(), |s| format!("seed {s}"));
        summary.push_str(&format!("\n  {seed} q={} {}: {}", f.q, f.check, f.detail.as_deref().unwrap_or("")));
    }
    Ok(w.finish(batch.failed == 0, summary))
}

#[derive(Serialize)]
struct CollapseRecord {
    n: usize,
    q: f64,
    steps: usize,
    betti_start: Option<BettiPair>,
    betti_end: Option<BettiPair>,
    betti_alpha: Option<BettiPair>,
    error: Option<String>,
}

/// Collapses the Delaunay-Čech complex onto the alpha complex and writes
/// the trace and both complexes. A stuck collapse dumps the instance.
pub fn cmd_collapse(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    require_points(config, "collapse")?;
    let (ps, _) = instance(config, config.seed)?;
    let q = config.q();
    let context = instance_context(config);
    let alpha = alpha_complex(&ps, q).map_err(|e| CliError::Input(format!("{context}: {e}")))?;
    let mut w = Writer::new(&config.out)?;
    let mut record = CollapseRecord {
        n: ps.len(),
        q,
        steps: 0,
        betti_start: None,
        betti_end: None,
        betti_alpha: Some(alpha.betti()),
        error: None,
    };
    match collapse_to_alpha(&ps, q) {
        Ok(trace) => {
            record.steps = trace.steps.len();
            record.betti_start = Some(trace.start.betti());
            record.betti_end = Some(trace.end.betti());
            w.text("collapse.txt", &trace.to_text())?;
            w.text("alpha.txt", &alpha.to_listing())?;
            w.text("delaunay_cech.txt", &trace.start.to_listing())?;
            w.json("collapse.json", &record)?;
            Ok(w.finish(true, format!("{} collapse steps", record.steps)))
        }
        Err(CollapseError::Geometry(e)) => Err(CliError::Input(format!("{context}: {e}"))),
        Err(e) => {
            record.error = Some(format!("{context}: {e}"));
            w.text("failed_instance.txt", &write_points(&ps))?;
            w.json("collapse.json", &record)?;
            Ok(w.finish(false, format!("collapse failed on {context}: {e}")))
        }
    }
}

/// Draws the alpha shape over the union of disks and the alpha complex over
/// the Delaunay-Čech complex.
pub fn cmd_render(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    require_points(config, "render")?;
    let (ps, _) = instance(config, config.seed)?;
    let q = config.q();
    let context = instance_context(config);
    let input = |e: crate::error::GeometryError| CliError::Input(format!("{context}: {e}"));
    let alpha = alpha_complex(&ps, q).map_err(input)?;
    let dc = delaunay_cech(&ps, q).map_err(input)?;
    let graph = DistanceGraph::build(&ps, config.r).map_err(|e| CliError::Input(e.to_string()))?;
    let shape = local_shape(&graph, q, context)?;
    let mut w = Writer::new(&config.out)?;
    w.text("figure_shape.svg", &shape_svg(&ps, q, &shape.boundary_edges, Some(&alpha)))?;
    w.text("figure_equivalence.svg", &equivalence_svg(&ps, q, &alpha, &dc))?;
    let nested = alpha.is_subcomplex_of(&dc);
    let summary = format!(
        "alpha complex {} edges / {} triangles, Delaunay-Cech {} edges / {} triangles",
        alpha.edges().len(),
        alpha.triangles().len(),
        dc.edges().len(),
        dc.triangles().len()
    );
    Ok(w.finish(nested, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(dir: &Path) -> RunConfig {
        RunConfig { out: dir.to_path_buf(), n: 30, ..Default::default() }
    }

    #[test]
    fn q_above_r_is_usage_error() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = RunConfig { q: Some(0.3), ..config(dir.path()) };
        assert!(matches!(cmd_shape(&cfg), Err(CliError::Usage(_))));
    }

    #[test]
    fn generate_then_shape_from_files() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = config(dir.path());
        cmd_generate(&cfg).unwrap();
        let from_points = RunConfig { points: Some(dir.path().join("points.txt")), ..cfg.clone() };
        assert!(cmd_shape(&from_points).unwrap().passed);
        let json = fs::read_to_string(dir.path().join("shape.json")).unwrap();
        assert!(json.contains("\"missing\": []"));

        let edge_dir = dir.path().join("edges");
        let from_edges = RunConfig { edges: Some(dir.path().join("edges.txt")), out: edge_dir.clone(), ..cfg };
        let outcome = cmd_shape(&from_edges).unwrap();
        assert_eq!(outcome.files, vec![edge_dir.join("shape.json")]);
    }

    #[test]
    fn empty_batch_passes() {
        let dir = tempfile::tempdir().unwrap();
        let outcome = cmd_verify(&RunConfig { batch: 0, ..config(dir.path()) }).unwrap();
        assert!(outcome.passed);
    }

    #[test]
    fn injected_fault_fails_with_diff() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = RunConfig { batch: 1, q: Some(0.25), inject_fault: true, ..config(dir.path()) };
        let outcome = cmd_verify(&cfg).unwrap();
        assert!(!outcome.passed);
        let json = fs::read_to_string(dir.path().join("verify_report.json")).unwrap();
        assert!(json.contains("local_matches_oracle") && json.contains("extra"));
    }
}
