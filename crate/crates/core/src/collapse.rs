//! Pairing of the surplus simplices of the Delaunay-Čech complex with
//! respect to the alpha complex, the elementary collapses it drives, and an
//! aggregated homotopy-equivalence report.
//!
//! Every surplus edge `e` (in `DT ∩ Č` but not in the alpha complex) has
//! exactly one incident triangle whose angle opposite `e` is obtuse; that
//! triangle is surplus too, and the map is a bijection. Collapsing each
//! edge into its partner, in an order where the edge is free at the time,
//! ends exactly on the alpha complex.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::{BettiPair, Complex2, Edge, Triangle};
use crate::complexes::{
    midpoint_is_witness, near_degeneracies, nerve_alpha_complex, triangle_sets_in, ComplexFamily, TriangleSetError,
};
use crate::error::{CollapseError, GeometryError, LocalError};
use crate::geometry::PointSet;
use crate::graph::DistanceGraph;
use crate::local::{alpha_shape_local, audit_locality, simulate_distributed};

pub type Pairing = BTreeMap<Edge, Triangle>;

pub fn build_pairing(ps: &PointSet, q: f64) -> Result<Pairing, CollapseError> {
    let family = ComplexFamily::build(ps, q)?;
    pairing_in(&family, ps)
}

/// [`build_pairing`] over precomputed complexes.
pub fn pairing_in(family: &ComplexFamily, ps: &PointSet) -> Result<Pairing, CollapseError> {
    let surplus_edges: BTreeSet<Edge> =
        family.delaunay_cech.edges().difference(family.alpha.edges()).copied().collect();
    let surplus_triangles: BTreeSet<Triangle> =
        family.delaunay_cech.triangles().difference(family.alpha.triangles()).copied().collect();

    let mut pairing = Pairing::new();
    let mut image = BTreeSet::new();
    for &e in &surplus_edges {
        let violation = |reason: String| CollapseError::PairingViolation { edge: e, reason };
        let sets = triangle_sets_in(&family.u, ps, family.q, e).map_err(|err| match err {
            TriangleSetError::Geometry(g) => CollapseError::Geometry(g),
            TriangleSetError::Graph(g) => violation(g.to_string()),
        })?;
        let [t] = sets.obtuse_opposite[..] else {
            return Err(violation(format!(
                "{} incident triangles are obtuse opposite the edge",
                sets.obtuse_opposite.len()
            )));
        };
        if !surplus_triangles.contains(&t) {
            return Err(violation(format!("partner {t} is not a surplus triangle")));
        }
        if !image.insert(t) {
            return Err(violation(format!("partner {t} is already paired")));
        }
        pairing.insert(e, t);
    }
    if let Some(&t) = surplus_triangles.difference(&image).next() {
        return Err(CollapseError::UnpairedTriangle(t));
    }
    Ok(pairing)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CollapseTrace {
    pub steps: Vec<(Edge, Triangle)>,
    pub start: Complex2,
    pub end: Complex2,
}

impl CollapseTrace {
    /// One `collapse e(i,j) t(i,j,k)` line per step.
    pub fn to_text(&self) -> String {
        self.steps
            .iter()
            .map(|(e, t)| {
                let [a, b, c] = t.vertices();
                format!("collapse e({},{}) t({a},{b},{c})\n", e.lo(), e.hi())
            })
            .collect()
    }

    /// Replays the trace from `start`, checking that each removed edge is a
    /// face of exactly its partner triangle at that moment and that the
    /// replay ends on `end`.
    pub fn validate(&self) -> Result<(), String> {
        let mut current = self.start.clone();
        for (step, &(e, t)) in self.steps.iter().enumerate() {
            let cofaces = current.cofaces(e);
            if !current.contains_edge(e) || cofaces != [t] {
                return Err(format!("step {step}: {e} is not free with coface {t} (cofaces {cofaces:?})"));
            }
            current.remove_edge(e);
            current.remove_triangle(t);
        }
        if current != self.end {
            return Err("replay does not end on the recorded complex".into());
        }
        Ok(())
    }
}

/// Collapses the Delaunay-Čech complex onto the alpha complex.
pub fn collapse_to_alpha(ps: &PointSet, q: f64) -> Result<CollapseTrace, CollapseError> {
    let family = ComplexFamily::build(ps, q)?;
    let pairing = pairing_in(&family, ps)?;
    let trace = run_collapse(&family.delaunay_cech, &pairing)?;
    if trace.end != family.alpha {
        return Err(CollapseError::EndMismatch);
    }
    Ok(trace)
}

/// Greedy schedule: repeatedly takes the smallest pending edge that is
/// currently a face of exactly one triangle, its partner.
pub fn run_collapse(start: &Complex2, pairing: &Pairing) -> Result<CollapseTrace, CollapseError> {
    let mut current = start.clone();
    let mut counts = start.coface_counts();
    let mut pending = pairing.clone();
    let mut steps = Vec::with_capacity(pairing.len());
    while !pending.is_empty() {
        let free = pending
            .iter()
            .find(|(e, t)| counts.get(e) == Some(&1) && current.contains_triangle(**t))
            .map(|(&e, &t)| (e, t));
        let Some((e, t)) = free else {
            return Err(CollapseError::StuckCollapse { remaining: pending.into_iter().collect() });
        };
        pending.remove(&e);
        current.remove_edge(e);
        current.remove_triangle(t);
        counts.remove(&e);
        for face in t.edges() {
            if let Some(c) = counts.get_mut(&face) {
                *c -= 1;
            }
        }
        steps.push((e, t));
    }
    Ok(CollapseTrace { steps, start: start.clone(), end: current })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Everything [`verify_equivalence`] measured for one instance.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub range: f64,
    pub q: f64,
    pub betti_alpha: Option<BettiPair>,
    pub betti_delaunay_cech: Option<BettiPair>,
    pub betti_cech: Option<BettiPair>,
    pub components: Option<usize>,
    pub pairing_size: Option<usize>,
    pub surplus_triangles: Option<usize>,
    pub trace_length: Option<usize>,
    pub locality_reads: Option<usize>,
    /// Set when some decision sits within the degeneracy margin.
    pub degenerate: bool,
    pub degeneracies: Vec<String>,
    pub errors: Vec<String>,
    pub checks: Vec<Check>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn record(&mut self, name: &str, passed: bool, detail: impl FnOnce() -> String) {
        let detail = (!passed).then(detail);
        self.checks.push(Check { name: name.to_string(), passed, detail });
    }
}

/// Runs every check with the distance graph collected at range `q`.
pub fn verify_equivalence(ps: &PointSet, q: f64) -> EquivalenceReport {
    verify_with_range(ps, q, q)
}

/// Runs every check for parameter `q`, with the coordinate-free side
/// reading the graph collected at range `r ≥ q`. Failures of one stage are
/// recorded and the remaining checks still run.
pub fn verify_with_range(ps: &PointSet, r: f64, q: f64) -> EquivalenceReport {
    let mut report = EquivalenceReport { n: ps.len(), range: r, q, ..Default::default() };
    let family = match ComplexFamily::build(ps, q) {
        Ok(family) => family,
        Err(err) => {
            report.degenerate = matches!(
                err,
                GeometryError::CocircularDegeneracy(_)
                    | GeometryError::DegenerateInput(_)
                    | GeometryError::CollinearPoints
            );
            report.errors.push(format!("complexes: {err}"));
            return report;
        }
    };
    report.degeneracies = near_degeneracies(ps, q, &family.delaunay);
    report.degenerate = !report.degeneracies.is_empty();

    check_complexes(&mut report, &family);
    check_membership_rules(&mut report, &family, ps);
    check_collapse(&mut report, &family, ps);
    check_local(&mut report, &family, ps, r);
    report
}

fn check_complexes(report: &mut EquivalenceReport, family: &ComplexFamily) {
    let subset = |name: &str, a: &Complex2, b: &Complex2, report: &mut EquivalenceReport| {
        report.record(name, a.is_subcomplex_of(b), || "inclusion fails".into());
    };
    subset("nesting_alpha_in_delaunay_cech", &family.alpha, &family.delaunay_cech, report);
    subset("nesting_delaunay_cech_in_u", &family.delaunay_cech, &family.u, report);
    subset("nesting_u_in_delaunay", &family.u, &family.delaunay, report);
    subset("nesting_cech_in_flag", &family.cech, &family.flag, report);
    let all_closed = [&family.alpha, &family.delaunay_cech, &family.u, &family.cech, &family.flag, &family.delaunay]
        .iter()
        .all(|k| k.is_closed());
    report.record("complexes_closed", all_closed, || "a complex is missing a face".into());

    let (alpha, dc, cech) = (family.alpha.betti(), family.delaunay_cech.betti(), family.cech.betti());
    report.betti_alpha = Some(alpha);
    report.betti_delaunay_cech = Some(dc);
    report.betti_cech = Some(cech);
    report.record("betti_delaunay_cech_eq_alpha", alpha == dc, || format!("{dc:?} vs {alpha:?}"));
}

fn check_membership_rules(report: &mut EquivalenceReport, family: &ComplexFamily, ps: &PointSet) {
    let q = family.q;
    let nerve = match nerve_alpha_complex(ps, q) {
        Ok(nerve) => nerve,
        Err(err) => {
            report.errors.push(format!("nerve: {err}"));
            return;
        }
    };
    report.record("alpha_matches_nerve_definition", nerve == family.alpha, || {
        let extra: Vec<_> = family.alpha.edges().symmetric_difference(nerve.edges()).collect();
        let extra_t: Vec<_> = family.alpha.triangles().symmetric_difference(nerve.triangles()).collect();
        format!("edge diff {extra:?}, triangle diff {extra_t:?}")
    });

    // triangles of U: in the alpha complex iff circumradius ≤ q/2
    let mut bad_triangles = Vec::new();
    for &t in family.u.triangles() {
        let [a, b, c] = t.vertices();
        match crate::geometry::circumradius(ps.point(a), ps.point(b), ps.point(c)) {
            Ok(r) if (r <= 0.5 * q) != nerve.contains_triangle(t) => bad_triangles.push(t.to_string()),
            Ok(_) => {}
            Err(err) => bad_triangles.push(format!("{t}: {err}")),
        }
    }
    report.record("triangle_membership_by_circumradius", bad_triangles.is_empty(), || bad_triangles.join(", "));

    let (mut bad_midpoints, mut bad_edges, mut multi_obtuse) = (Vec::new(), Vec::new(), Vec::new());
    for &e in family.u.edges() {
        let sets = match triangle_sets_in(&family.u, ps, q, e) {
            Ok(sets) => sets,
            Err(err) => {
                bad_edges.push(format!("{e}: {err}"));
                continue;
            }
        };
        let no_obtuse = sets.obtuse_opposite.is_empty();
        if midpoint_is_witness(ps, e.lo(), e.hi()) != no_obtuse {
            bad_midpoints.push(e.to_string());
        }
        if (no_obtuse || !sets.small_circumradius.is_empty()) != nerve.contains_edge(e) {
            bad_edges.push(e.to_string());
        }
        if sets.obtuse_opposite.len() > 1 {
            multi_obtuse.push(e.to_string());
        }
    }
    report.record("midpoint_witness_iff_no_obtuse", bad_midpoints.is_empty(), || bad_midpoints.join(", "));
    report.record("edge_membership_rule", bad_edges.is_empty(), || bad_edges.join(", "));
    report.record("at_most_one_obtuse_triangle", multi_obtuse.is_empty(), || multi_obtuse.join(", "));
}

fn check_collapse(report: &mut EquivalenceReport, family: &ComplexFamily, ps: &PointSet) {
    let surplus = family.delaunay_cech.triangles().difference(family.alpha.triangles()).count();
    report.surplus_triangles = Some(surplus);
    let pairing = match pairing_in(family, ps) {
        Ok(pairing) => pairing,
        Err(err) => {
            report.record("pairing_bijective", false, || err.to_string());
            return;
        }
    };
    report.pairing_size = Some(pairing.len());
    report.record("pairing_bijective", pairing.len() == surplus, || {
        format!("{} edges vs {surplus} triangles", pairing.len())
    });
    match run_collapse(&family.delaunay_cech, &pairing) {
        Ok(trace) => {
            report.trace_length = Some(trace.steps.len());
            report.record("collapse_steps_free", trace.validate().is_ok(), || trace.validate().unwrap_err());
            report.record("collapse_ends_on_alpha", trace.end == family.alpha, || {
                "collapsed complex differs from the alpha complex".into()
            });
            report.record("trace_length_eq_pairing", trace.steps.len() == pairing.len(), || {
                format!("{} steps for {} pairs", trace.steps.len(), pairing.len())
            });
        }
        Err(err) => report.record("collapse_ends_on_alpha", false, || err.to_string()),
    }
}

fn check_local(report: &mut EquivalenceReport, family: &ComplexFamily, ps: &PointSet, r: f64) {
    let q = family.q;
    let graph = match DistanceGraph::build(ps, r) {
        Ok(g) => g,
        Err(err) => {
            report.errors.push(format!("graph: {err}"));
            return;
        }
    };
    let components = graph.restrict(q).map(|g| g.component_count());
    if let Ok(count) = components {
        report.components = Some(count);
        let b0 = family.alpha.betti().b0;
        report.record("nerve_b0_eq_components", b0 == count, || format!("b0 {b0} vs {count} components"));
    }
    let (alpha_b1, cech_b1) = (family.alpha.betti().b1, family.cech.betti().b1);
    report.record("nerve_b1_eq_cech", alpha_b1 == cech_b1, || format!("{alpha_b1} vs {cech_b1}"));

    let shape = match alpha_shape_local(&graph, q) {
        Ok(shape) => shape,
        Err(err) => {
            if is_ambiguity(&err) {
                report.degenerate = true;
                report.degeneracies.push(err.to_string());
            }
            report.record("local_matches_oracle", false, || err.to_string());
            return;
        }
    };
    if shape.is_near_degenerate() {
        report.degenerate = true;
        report.degeneracies.push("local decision within the margin of a circle".into());
    }
    let oracle = family.alpha.boundary_shape();
    report.record("local_matches_oracle", &shape.boundary_edges == oracle.edges(), || {
        let missing: Vec<_> = oracle.edges().difference(&shape.boundary_edges).collect();
        let extra: Vec<_> = shape.boundary_edges.difference(oracle.edges()).collect();
        format!("missing {missing:?}, extra {extra:?}")
    });
    report.record("local_vertices_match_oracle", &shape.boundary_vertices == oracle.vertices(), || {
        "boundary vertex sets differ".into()
    });

    match audit_locality(&graph, q) {
        Ok(audit) => {
            report.locality_reads = Some(audit.reads);
            report.record("locality", audit.violations.is_empty(), || format!("{:?}", audit.violations));
        }
        Err(err) => report.record("locality", false, || err.to_string()),
    }
    match simulate_distributed(&graph, q) {
        Ok((sim, _)) => report
            .record("distributed_matches_local", sim.verdicts() == shape.verdicts(), || "verdict maps differ".into()),
        Err(err) => report.record("distributed_matches_local", false, || err.to_string()),
    }
}

fn is_ambiguity(err: &LocalError) -> bool {
    match err {
        LocalError::AmbiguousSideTest { .. } => true,
        LocalError::AtEdge { source, .. } => is_ambiguity(source),
        _ => false,
    }
}
