//! Coordinate-free alpha shape: decides for every edge of `G_r` whether it
//! lies on the boundary of the alpha complex, reading only the distances
//! between the edge's endpoints and their common neighbors.
//!
//! For an edge `(i, j)` and parameter `q`, the two circles of diameter `q`
//! through `v_i` and `v_j` are `C` and `C'`. Writing `θ` for the inscribed
//! angle of the chord on the major arc and `φ_k` for the angle `∠v_i v_k v_j`,
//! a common neighbor `v_k` lies
//!
//! * in both open disks when `φ_k > π − θ`,
//! * in neither when `φ_k ≤ θ`,
//! * in exactly one otherwise.
//!
//! The edge is on the boundary unless some node is in both disks, or the
//! two disks are each occupied by a different node. Nodes in exactly one
//! disk are sorted into sides by comparing `∠v_k v_i v_l` against the
//! difference and the sum of `∠v_k v_i v_j` and `∠v_l v_i v_j`.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use serde::Serialize;

use crate::complex::Edge;
use crate::error::{GraphError, LocalError};
use crate::geometry::{angle_from_sides, chord_inscribed_angle};
use crate::graph::{DistanceGraph, LocalDistances};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Boundary,
    NotBoundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reason {
    /// No common neighbor lies in exactly one of the disks.
    NoAnnulusNode,
    /// Every occupied disk is the same one.
    OneCircleOnly,
    /// A node lies in both disks.
    NodeInLens,
    /// Two nodes occupy different disks.
    BothCirclesOccupied,
}

impl Reason {
    pub fn verdict(self) -> Verdict {
        match self {
            Reason::NoAnnulusNode | Reason::OneCircleOnly => Verdict::Boundary,
            Reason::NodeInLens | Reason::BothCirclesOccupied => Verdict::NotBoundary,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeDecision {
    pub edge: Edge,
    pub verdict: Verdict,
    pub reason: Reason,
    /// Nodes that triggered termination: the lens node, or the reference
    /// node followed by the node found on the other side.
    pub evidence: Vec<usize>,
    /// Some node sat within the margin of a circle or of the distance `q`.
    pub near_degenerate: bool,
}

impl EdgeDecision {
    fn new(edge: Edge, reason: Reason, evidence: Vec<usize>, near_degenerate: bool) -> Self {
        EdgeDecision { edge, verdict: reason.verdict(), reason, evidence, near_degenerate }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalShape {
    pub q: f64,
    pub boundary_edges: BTreeSet<Edge>,
    pub boundary_vertices: BTreeSet<usize>,
    pub decisions: BTreeMap<Edge, EdgeDecision>,
}

impl LocalShape {
    pub fn verdicts(&self) -> BTreeMap<Edge, Verdict> {
        self.decisions.iter().map(|(&e, d)| (e, d.verdict)).collect()
    }

    pub fn is_near_degenerate(&self) -> bool {
        self.decisions.values().any(|d| d.near_degenerate)
    }
}

/// Classifies the edge `(i, j)` for parameter `q`, visiting common
/// neighbors in ascending order.
pub fn classify_edge<G: LocalDistances + ?Sized>(
    g: &G,
    i: usize,
    j: usize,
    q: f64,
) -> Result<EdgeDecision, LocalError> {
    check_parameter(g, q)?;
    if g.length(i, j).is_none() {
        return Err(GraphError::NotAnEdge(i, j).into());
    }
    let order = g.common_neighbors(i, j);
    classify_edge_in_order(g, i, j, q, &order)
}

/// [`classify_edge`] with an explicit visiting order for the common
/// neighbors. The verdict does not depend on the order; the reason and
/// evidence may.
pub fn classify_edge_in_order<G: LocalDistances + ?Sized>(
    g: &G,
    i: usize,
    j: usize,
    q: f64,
    order: &[usize],
) -> Result<EdgeDecision, LocalError> {
    check_parameter(g, q)?;
    let edge = Edge::new(i, j);
    let d_ij = g.length(i, j).ok_or(GraphError::NotAnEdge(i, j))?;
    if d_ij > q {
        return Err(LocalError::EdgeLongerThanParameter { i, j, length: d_ij, q });
    }
    let tol = g.epsilon();
    let theta = chord_inscribed_angle(d_ij, q)?.radians();
    let lens = PI - theta;
    let mut near_degenerate = false;
    // (node, |v_i v_k|, ∠v_k v_i v_j) of the first node found in one disk
    let mut reference: Option<(usize, f64, f64)> = None;

    for &k in order {
        let (Some(d_ik), Some(d_jk)) = (g.length(i, k), g.length(j, k)) else {
            return Err(GraphError::NotAnEdge(i, k).into());
        };
        let far = d_ik.max(d_jk);
        if (far - q).abs() <= tol * q {
            near_degenerate = true;
        }
        if far >= q {
            continue;
        }
        let phi = angle_from_sides(d_ik, d_jk, d_ij)?.radians();
        if (phi - lens).abs() <= tol || (phi - theta).abs() <= tol {
            near_degenerate = true;
        }
        if phi > lens + tol {
            return Ok(EdgeDecision::new(edge, Reason::NodeInLens, vec![k], near_degenerate));
        }
        if phi <= theta + tol {
            continue;
        }
        let at_i = angle_from_sides(d_ik, d_ij, d_jk)?.radians();
        let Some((k0, d_ik0, at_i0)) = reference else {
            reference = Some((k, d_ik, at_i));
            continue;
        };
        // Two points inside one disk of diameter q ≤ r are always adjacent.
        let Some(d_k0k) = g.length(k0, k) else {
            return Ok(EdgeDecision::new(edge, Reason::BothCirclesOccupied, vec![k0, k], near_degenerate));
        };
        let beta = angle_from_sides(d_ik0, d_ik, d_k0k)?.radians();
        let same_side = (at_i0 - at_i).abs();
        let sum = at_i0 + at_i;
        let opposite_side = if sum > PI { 2.0 * PI - sum } else { sum };
        if (opposite_side - same_side).abs() < tol {
            return Err(LocalError::AmbiguousSideTest { i, j, reference: k0, other: k });
        }
        if (beta - same_side).abs() > (beta - opposite_side).abs() {
            return Ok(EdgeDecision::new(edge, Reason::BothCirclesOccupied, vec![k0, k], near_degenerate));
        }
    }

    let reason = if reference.is_some() { Reason::OneCircleOnly } else { Reason::NoAnnulusNode };
    Ok(EdgeDecision::new(edge, reason, Vec::new(), near_degenerate))
}

fn check_parameter<G: LocalDistances + ?Sized>(g: &G, q: f64) -> Result<(), LocalError> {
    if q.is_nan() || q <= 0.0 {
        return Err(LocalError::NonPositiveParameter(q));
    }
    if q > g.range() {
        return Err(LocalError::ParameterTooLarge { q, range: g.range() });
    }
    Ok(())
}

/// Alpha shape for parameter `q`: classifies every edge of length at most
/// `q`. Boundary vertices are the endpoints of boundary edges together with
/// the vertices that have no neighbor within `q`.
pub fn alpha_shape_local(g: &DistanceGraph, q: f64) -> Result<LocalShape, LocalError> {
    check_parameter(g, q)?;
    let mut decisions = BTreeMap::new();
    for (edge, d) in g.edges() {
        if d > q {
            continue;
        }
        let decision = classify_edge(g, edge.lo(), edge.hi(), q).map_err(|e| at_edge(edge, e))?;
        decisions.insert(edge, decision);
    }
    Ok(assemble(g, q, decisions))
}

fn at_edge(edge: Edge, source: LocalError) -> LocalError {
    LocalError::AtEdge { edge, source: Box::new(source) }
}

fn assemble(g: &DistanceGraph, q: f64, decisions: BTreeMap<Edge, EdgeDecision>) -> LocalShape {
    let boundary_edges: BTreeSet<Edge> =
        decisions.values().filter(|d| d.verdict == Verdict::Boundary).map(|d| d.edge).collect();
    let mut boundary_vertices: BTreeSet<usize> = boundary_edges.iter().flat_map(|e| e.vertices()).collect();
    boundary_vertices.extend((0..g.n()).filter(|&v| g.neighbors(v).all(|(_, d)| d > q)));
    LocalShape { q, boundary_edges, boundary_vertices, decisions }
}

/// Wraps a distance source and records every distance it hands out.
#[derive(Debug)]
pub struct AccessLog<'a, G: ?Sized> {
    inner: &'a G,
    reads: RefCell<Vec<(usize, usize)>>,
    neighbor_queries: RefCell<Vec<(usize, usize)>>,
}

impl<'a, G: LocalDistances + ?Sized> AccessLog<'a, G> {
    pub fn new(inner: &'a G) -> Self {
        AccessLog { inner, reads: RefCell::default(), neighbor_queries: RefCell::default() }
    }

    pub fn reads(&self) -> Vec<(usize, usize)> {
        self.reads.borrow().clone()
    }

    pub fn neighbor_queries(&self) -> Vec<(usize, usize)> {
        self.neighbor_queries.borrow().clone()
    }
}

impl<G: LocalDistances + ?Sized> LocalDistances for AccessLog<'_, G> {
    fn length(&self, a: usize, b: usize) -> Option<f64> {
        self.reads.borrow_mut().push((a, b));
        self.inner.length(a, b)
    }

    fn common_neighbors(&self, i: usize, j: usize) -> Vec<usize> {
        self.neighbor_queries.borrow_mut().push((i, j));
        self.inner.common_neighbors(i, j)
    }

    fn range(&self) -> f64 {
        self.inner.range()
    }

    fn epsilon(&self) -> f64 {
        self.inner.epsilon()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalityViolation {
    pub edge: Edge,
    /// The pair read (or neighbor query issued) outside the edge's
    /// neighborhood.
    pub access: (usize, usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LocalityAudit {
    pub edges_checked: usize,
    pub reads: usize,
    pub violations: Vec<LocalityViolation>,
}

/// Runs [`classify_edge`] on every edge of length at most `q` behind an
/// [`AccessLog`] and reports any read involving a vertex outside
/// `N_i ∪ N_j ∪ {i, j}`.
pub fn audit_locality(g: &DistanceGraph, q: f64) -> Result<LocalityAudit, LocalError> {
    let mut audit = LocalityAudit::default();
    for (edge, d) in g.edges() {
        if d > q {
            continue;
        }
        let (i, j) = (edge.lo(), edge.hi());
        let log = AccessLog::new(g);
        classify_edge(&log, i, j, q).map_err(|e| at_edge(edge, e))?;
        let allowed: BTreeSet<usize> =
            [i, j].into_iter().chain(g.neighbors(i).map(|(u, _)| u)).chain(g.neighbors(j).map(|(u, _)| u)).collect();
        let reads = log.reads();
        audit.edges_checked += 1;
        audit.reads += reads.len();
        for (a, b) in reads {
            if !allowed.contains(&a) || !allowed.contains(&b) {
                audit.violations.push(LocalityViolation { edge, access: (a, b) });
            }
        }
        for query in log.neighbor_queries() {
            if Edge::new(query.0, query.1) != edge {
                audit.violations.push(LocalityViolation { edge, access: query });
            }
        }
    }
    Ok(audit)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SimStats {
    pub rounds: usize,
    pub messages: usize,
    /// Total distance entries carried by all messages.
    pub payload_entries: usize,
    pub per_node_messages: BTreeMap<usize, usize>,
}

/// What one node knows after the exchange round: its own neighbor
/// distances and the neighbor distance lists of each neighbor.
#[derive(Debug)]
struct NodeTable<'a> {
    owner: usize,
    range: f64,
    epsilon: f64,
    lists: BTreeMap<usize, &'a BTreeMap<usize, f64>>,
    unknown: RefCell<Option<(usize, usize)>>,
}

impl NodeTable<'_> {
    fn miss(&self, a: usize, b: usize) {
        self.unknown.borrow_mut().get_or_insert((a, b));
    }
}

impl LocalDistances for NodeTable<'_> {
    fn length(&self, a: usize, b: usize) -> Option<f64> {
        if let Some(list) = self.lists.get(&a) {
            list.get(&b).copied()
        } else if let Some(list) = self.lists.get(&b) {
            list.get(&a).copied()
        } else {
            self.miss(a, b);
            None
        }
    }

    fn common_neighbors(&self, i: usize, j: usize) -> Vec<usize> {
        let (Some(ni), Some(nj)) = (self.lists.get(&i), self.lists.get(&j)) else {
            self.miss(i, j);
            return Vec::new();
        };
        ni.keys().copied().filter(|k| *k != j && nj.contains_key(k)).collect()
    }

    fn range(&self) -> f64 {
        self.range
    }

    fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// Two-round message-passing execution of [`alpha_shape_local`].
///
/// Round one: every node sends its neighbor distance list to each
/// neighbor. Round two: the lower-indexed endpoint of each edge classifies
/// it from its own table. The verdicts equal those of the global run.
pub fn simulate_distributed(g: &DistanceGraph, q: f64) -> Result<(LocalShape, SimStats), LocalError> {
    check_parameter(g, q)?;
    let lists: Vec<BTreeMap<usize, f64>> = (0..g.n()).map(|v| g.neighbors(v).collect()).collect();

    let mut stats = SimStats::default();
    for (v, list) in lists.iter().enumerate() {
        let degree = list.len();
        stats.per_node_messages.insert(v, degree);
        stats.messages += degree;
        stats.payload_entries += degree * degree;
    }
    if stats.messages > 0 {
        stats.rounds = 2;
    }

    let mut decisions = BTreeMap::new();
    for (edge, d) in g.edges() {
        if d > q {
            continue;
        }
        let owner = edge.lo();
        let table = NodeTable {
            owner,
            range: g.range(),
            epsilon: g.epsilon(),
            lists: std::iter::once(owner).chain(lists[owner].keys().copied()).map(|v| (v, &lists[v])).collect(),
            unknown: RefCell::new(None),
        };
        let decision = classify_edge(&table, edge.lo(), edge.hi(), q).map_err(|e| at_edge(edge, e))?;
        if let Some((a, b)) = table.unknown.take() {
            return Err(at_edge(edge, LocalError::NonLocalQuery { node: table.owner, a, b }));
        }
        decisions.insert(edge, decision);
    }
    Ok((assemble(g, q, decisions), stats))
}
