//! Coordinate-based constructions: alpha complex, Čech and flag 2-skeletons,
//! the Delaunay-Čech complex `DT ∩ Č` and the ambient complex `DT ∩ F(G)`.
//!
//! Alpha complex membership is decided from the Delaunay triangulation:
//! a Delaunay triangle belongs when its circumradius is at most `q/2`, and a
//! Delaunay edge of length at most `q` belongs when its midpoint is a
//! witness (no point strictly inside its diametral circle) or it is a face
//! of such a triangle.

use serde::Serialize;

use crate::complex::{Complex2, Edge, Triangle};
use crate::error::{GeometryError, GraphError};
use crate::geometry::delaunay_or_path;
use crate::geometry::{circumcircle, circumradius, cos_angle_at, is_obtuse_at, min_enclosing_radius, PointSet};
use crate::graph::DistanceGraph;

pub fn alpha_complex(ps: &PointSet, q: f64) -> Result<Complex2, GeometryError> {
    let dt = delaunay_or_path(ps)?;
    alpha_from_delaunay(ps, q, &dt)
}

fn alpha_from_delaunay(ps: &PointSet, q: f64, dt: &Complex2) -> Result<Complex2, GeometryError> {
    let mut alpha = Complex2::with_vertices(0..ps.len());
    for &t in dt.triangles() {
        if triangle_circumradius(ps, t)? <= 0.5 * q {
            alpha.insert_triangle(t);
        }
    }
    for &e in dt.edges() {
        if ps.dist(e.lo(), e.hi()) <= q && midpoint_is_witness(ps, e.lo(), e.hi()) {
            alpha.insert_edge(e);
        }
    }
    Ok(alpha)
}

/// True iff no input point lies strictly inside the circle having segment
/// `(i, j)` as a diameter.
pub fn midpoint_is_witness(ps: &PointSet, i: usize, j: usize) -> bool {
    let (a, b) = (ps.point(i), ps.point(j));
    let m = a.midpoint(b);
    let radius = 0.5 * a.dist(b);
    ps.points().iter().enumerate().all(|(k, &p)| k == i || k == j || m.dist(p) >= radius)
}

/// Čech 2-skeleton for disks of radius `q/2`.
pub fn cech2(ps: &PointSet, q: f64) -> Result<Complex2, GeometryError> {
    let g = DistanceGraph::build(ps, q).map_err(|e| GeometryError::DegenerateInput(e.to_string()))?;
    let mut cech = Complex2::with_vertices(0..ps.len());
    for (e, _) in g.edges() {
        cech.insert_edge(e);
    }
    for t in cliques3(&g) {
        let [a, b, c] = t.vertices();
        if min_enclosing_radius(ps.point(a), ps.point(b), ps.point(c))? <= 0.5 * q {
            cech.insert_triangle(t);
        }
    }
    Ok(cech)
}

/// Flag (clique) 2-skeleton of a graph.
pub fn flag2(g: &DistanceGraph) -> Complex2 {
    let mut flag = Complex2::with_vertices(0..g.n());
    for (e, _) in g.edges() {
        flag.insert_edge(e);
    }
    for t in cliques3(g) {
        flag.insert_triangle(t);
    }
    flag
}

fn cliques3(g: &DistanceGraph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for (e, _) in g.edges() {
        let (a, b) = (e.lo(), e.hi());
        for (c, _) in g.neighbors(b) {
            if c > b && g.is_edge(a, c) {
                out.push(Triangle::new(a, b, c));
            }
        }
    }
    out
}

/// `DT(V) ∩ Č(V, q)`.
pub fn delaunay_cech(ps: &PointSet, q: f64) -> Result<Complex2, GeometryError> {
    let dt = delaunay_or_path(ps)?;
    delaunay_cech_from(ps, q, &dt)
}

fn delaunay_cech_from(ps: &PointSet, q: f64, dt: &Complex2) -> Result<Complex2, GeometryError> {
    let mut dc = Complex2::with_vertices(0..ps.len());
    for &e in dt.edges() {
        if ps.dist(e.lo(), e.hi()) <= q {
            dc.insert_edge(e);
        }
    }
    for &t in dt.triangles() {
        let [a, b, c] = t.vertices();
        if min_enclosing_radius(ps.point(a), ps.point(b), ps.point(c))? <= 0.5 * q {
            dc.insert_triangle(t);
        }
    }
    Ok(dc)
}

/// `DT(V) ∩ F(G_q)`.
pub fn u_complex(ps: &PointSet, q: f64) -> Result<Complex2, GeometryError> {
    let dt = delaunay_or_path(ps)?;
    Ok(u_complex_from(ps, q, &dt))
}

fn u_complex_from(ps: &PointSet, q: f64, dt: &Complex2) -> Complex2 {
    let short = |e: &Edge| ps.dist(e.lo(), e.hi()) <= q;
    let mut u = Complex2::with_vertices(0..ps.len());
    for e in dt.edges().iter().filter(|e| short(e)) {
        u.insert_edge(*e);
    }
    for t in dt.triangles().iter().filter(|t| t.edges().iter().all(short)) {
        u.insert_triangle(*t);
    }
    u
}

fn triangle_circumradius(ps: &PointSet, t: Triangle) -> Result<f64, GeometryError> {
    let [a, b, c] = t.vertices();
    circumradius(ps.point(a), ps.point(b), ps.point(c))
}

/// Alpha complex straight from its definition as the nerve of the
/// Voronoi-restricted disks of radius `q/2`, without a triangulation.
///
/// An edge `(i, j)` is present when some point of the perpendicular
/// bisector lies in both closed Voronoi cells and within `q/2` of `v_i`;
/// the cell constraints cut the bisector down to an interval, so this is an
/// exact interval intersection. A triangle is present when its circumcenter
/// has no input point strictly closer than the circumradius, and the
/// circumradius is at most `q/2`.
pub fn nerve_alpha_complex(ps: &PointSet, q: f64) -> Result<Complex2, GeometryError> {
    let g = DistanceGraph::build(ps, q).map_err(|e| GeometryError::DegenerateInput(e.to_string()))?;
    let mut nerve = Complex2::with_vertices(0..ps.len());
    for (e, _) in g.edges() {
        if bisector_witness_interval(ps, q, e).is_some() {
            nerve.insert_edge(e);
        }
    }
    for t in cliques3(&g) {
        let [a, b, c] = t.vertices();
        let Ok(circle) = circumcircle(ps.point(a), ps.point(b), ps.point(c)) else {
            continue;
        };
        let empty = ps
            .points()
            .iter()
            .enumerate()
            .all(|(k, &p)| t.vertices().contains(&k) || circle.center.dist(p) >= circle.radius);
        if empty && circle.radius <= 0.5 * q {
            nerve.insert_triangle(t);
        }
    }
    Ok(nerve)
}

/// Interval of signed offsets `t` along the unit normal of `e`, measured
/// from its midpoint, whose points lie in both Voronoi cells of `e`'s
/// endpoints and within `q/2` of them.
pub fn bisector_witness_interval(ps: &PointSet, q: f64, e: Edge) -> Option<(f64, f64)> {
    let (a, b) = (ps.point(e.lo()), ps.point(e.hi()));
    let half = 0.5 * a.dist(b);
    let reach = (0.5 * q).powi(2) - half * half;
    if reach < 0.0 {
        return None;
    }
    let m = a.midpoint(b);
    let (nx, ny) = (-(b.y - a.y) / (2.0 * half), (b.x - a.x) / (2.0 * half));
    let (mut lo, mut hi) = (-reach.sqrt(), reach.sqrt());
    for (k, p) in ps.points().iter().enumerate() {
        if e.contains(k) {
            continue;
        }
        // |x - v_i|² ≤ |x - v_k|²  ⇔  2 t (n · k') ≤ |k'|² − half²
        let (kx, ky) = (p.x - m.x, p.y - m.y);
        let slope = 2.0 * (nx * kx + ny * ky);
        let bound = kx * kx + ky * ky - half * half;
        if slope > 0.0 {
            hi = hi.min(bound / slope);
        } else if slope < 0.0 {
            lo = lo.max(bound / slope);
        } else if bound < 0.0 {
            return None;
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// Triangles around an edge of `U_q`: all of them, those with circumradius
/// at most `q/2`, and those whose angle opposite the edge exceeds π/2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TriangleSets {
    pub all: Vec<Triangle>,
    pub small_circumradius: Vec<Triangle>,
    pub obtuse_opposite: Vec<Triangle>,
}

pub fn triangle_sets(ps: &PointSet, q: f64, e: Edge) -> Result<TriangleSets, TriangleSetError> {
    let u = u_complex(ps, q)?;
    triangle_sets_in(&u, ps, q, e)
}

/// [`triangle_sets`] against a precomputed `U_q`.
pub fn triangle_sets_in(u: &Complex2, ps: &PointSet, q: f64, e: Edge) -> Result<TriangleSets, TriangleSetError> {
    if !u.contains_edge(e) {
        return Err(GraphError::NotAnEdge(e.lo(), e.hi()).into());
    }
    let mut sets = TriangleSets { all: u.cofaces(e), ..TriangleSets::default() };
    for &t in &sets.all {
        if triangle_circumradius(ps, t)? <= 0.5 * q {
            sets.small_circumradius.push(t);
        }
        let apex = t.opposite(e);
        if is_obtuse_at(ps.point(apex), ps.point(e.lo()), ps.point(e.hi())) {
            sets.obtuse_opposite.push(t);
        }
    }
    Ok(sets)
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TriangleSetError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Every complex built for one instance and parameter, sharing one
/// Delaunay triangulation.
#[derive(Clone, Debug)]
pub struct ComplexFamily {
    pub q: f64,
    pub delaunay: Complex2,
    pub alpha: Complex2,
    pub delaunay_cech: Complex2,
    pub u: Complex2,
    pub cech: Complex2,
    pub flag: Complex2,
}

impl ComplexFamily {
    pub fn build(ps: &PointSet, q: f64) -> Result<Self, GeometryError> {
        let delaunay = delaunay_or_path(ps)?;
        let g = DistanceGraph::build(ps, q).map_err(|e| GeometryError::DegenerateInput(e.to_string()))?;
        Ok(ComplexFamily {
            q,
            alpha: alpha_from_delaunay(ps, q, &delaunay)?,
            delaunay_cech: delaunay_cech_from(ps, q, &delaunay)?,
            u: u_complex_from(ps, q, &delaunay),
            cech: cech2(ps, q)?,
            flag: flag2(&g),
            delaunay,
        })
    }
}

/// Quantities that sit within the degeneracy margin of a decision
/// threshold for parameter `q`. An empty list means every membership
/// decision is separated from its threshold by more than the margin.
pub fn near_degeneracies(ps: &PointSet, q: f64, dt: &Complex2) -> Vec<String> {
    let tol = ps.tolerance();
    let eps = ps.epsilon();
    let mut found = Vec::new();
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            let d = ps.dist(i, j);
            if (d - q).abs() <= tol {
                found.push(format!("|{i}{j}| = {d} is within the margin of q"));
            }
        }
    }
    for &e in dt.edges() {
        let (a, b) = (ps.point(e.lo()), ps.point(e.hi()));
        let (m, radius) = (a.midpoint(b), 0.5 * a.dist(b));
        for (k, &p) in ps.points().iter().enumerate() {
            if !e.contains(k) && (m.dist(p) - radius).abs() <= tol {
                found.push(format!("point {k} is on the diametral circle of {e}"));
            }
        }
    }
    for &t in dt.triangles() {
        let [a, b, c] = t.vertices();
        let (pa, pb, pc) = (ps.point(a), ps.point(b), ps.point(c));
        if let Ok(r) = circumradius(pa, pb, pc) {
            if (r - 0.5 * q).abs() <= tol {
                found.push(format!("circumradius of {t} is within the margin of q/2"));
            }
        }
        if let Ok(r) = min_enclosing_radius(pa, pb, pc) {
            if (r - 0.5 * q).abs() <= tol {
                found.push(format!("enclosing radius of {t} is within the margin of q/2"));
            }
        }
        for (apex, u, v) in [(pa, pb, pc), (pb, pc, pa), (pc, pa, pb)] {
            if cos_angle_at(apex, u, v).abs() <= eps {
                found.push(format!("{t} has a right angle within the margin"));
            }
        }
    }
    if let Ok(g) = DistanceGraph::build(ps, q) {
        for t in cliques3(&g) {
            let [a, b, c] = t.vertices();
            if let Ok(r) = min_enclosing_radius(ps.point(a), ps.point(b), ps.point(c)) {
                if (r - 0.5 * q).abs() <= tol {
                    found.push(format!("Čech triple {t} is within the margin of q/2"));
                }
            }
        }
    }
    found
}
