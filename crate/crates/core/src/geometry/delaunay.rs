//! Delaunay triangulation by a lexicographic sweep followed by Lawson edge
//! flips.
//!
//! The sweep inserts points in `(x, y)` order; each new point lies outside
//! the current hull and is joined to every hull edge it sees. The resulting
//! triangulation covers the convex hull exactly, and flipping every edge that
//! fails the in-circle test turns it into the Delaunay triangulation.

use std::collections::HashMap;

use super::{circumcircle, Point, PointSet};
use crate::complex::{Complex2, Triangle};
use crate::error::GeometryError;

/// Twice the signed area of (a, b, c); positive when counter-clockwise.
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Positive when `d` lies strictly inside the circle through the
/// counter-clockwise triangle (a, b, c).
pub fn incircle(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let (adx, ady) = (a.x - d.x, a.y - d.y);
    let (bdx, bdy) = (b.x - d.x, b.y - d.y);
    let (cdx, cdy) = (c.x - d.x, c.y - d.y);
    let alift = adx * adx + ady * ady;
    let blift = bdx * bdx + bdy * bdy;
    let clift = cdx * cdx + cdy * cdy;
    alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) + clift * (adx * bdy - bdx * ady)
}

/// Delaunay triangulation as a complex over all points of `ps`.
///
/// Requires at least three points, not all collinear. Configurations where
/// the triangulation is not unique (four points cocircular within the
/// margin) are reported rather than resolved.
pub fn delaunay(ps: &PointSet) -> Result<Complex2, GeometryError> {
    let triangles = delaunay_triangles(ps)?;
    let mut complex = Complex2::with_vertices(0..ps.len());
    for [a, b, c] in triangles {
        complex.insert_triangle(Triangle::new(a, b, c));
    }
    Ok(complex)
}

/// Counter-clockwise Delaunay triangles of `ps`.
pub fn delaunay_triangles(ps: &PointSet) -> Result<Vec<[usize; 3]>, GeometryError> {
    if ps.len() < 3 {
        return Err(GeometryError::DegenerateInput("fewer than three points".into()));
    }
    let mut mesh = Mesh::sweep(ps)?;
    mesh.legalize(ps)?;
    mesh.check_degeneracy(ps)?;
    Ok(mesh.triangles)
}

/// Like [`delaunay`], but a collinear (or smaller than three point) input
/// yields the path through the points in line order, which is its Delaunay
/// graph.
pub(crate) fn delaunay_or_path(ps: &PointSet) -> Result<Complex2, GeometryError> {
    match delaunay(ps) {
        Ok(complex) => Ok(complex),
        Err(GeometryError::DegenerateInput(_)) if all_collinear(ps) => {
            let mut complex = Complex2::with_vertices(0..ps.len());
            let order = lexicographic_order(ps);
            for w in order.windows(2) {
                complex.insert_edge(crate::complex::Edge::new(w[0], w[1]));
            }
            Ok(complex)
        }
        Err(e) => Err(e),
    }
}

fn all_collinear(ps: &PointSet) -> bool {
    if ps.len() < 3 {
        return true;
    }
    let order = lexicographic_order(ps);
    let (a, b) = (ps.point(order[0]), ps.point(order[order.len() - 1]));
    let tol = ps.tolerance();
    let base = a.dist(b);
    ps.points().iter().all(|&p| orient(a, b, p).abs() <= tol * base)
}

fn lexicographic_order(ps: &PointSet) -> Vec<usize> {
    let pts = ps.points();
    let mut order: Vec<usize> = (0..ps.len()).collect();
    order.sort_by(|&a, &b| pts[a].x.total_cmp(&pts[b].x).then(pts[a].y.total_cmp(&pts[b].y)));
    order
}

struct Mesh {
    triangles: Vec<[usize; 3]>,
    /// Directed edge (a, b) -> triangle holding it in counter-clockwise order.
    half_edges: HashMap<(usize, usize), usize>,
}

impl Mesh {
    fn sweep(ps: &PointSet) -> Result<Self, GeometryError> {
        let pt = |i: usize| ps.point(i);
        let order = lexicographic_order(ps);
        let apex_pos = (2..order.len())
            .find(|&k| orient(pt(order[0]), pt(order[1]), pt(order[k])) != 0.0)
            .ok_or_else(|| GeometryError::DegenerateInput("all points collinear".into()))?;
        let apex = order[apex_pos];

        let mut mesh = Mesh { triangles: Vec::new(), half_edges: HashMap::new() };
        for w in order[..apex_pos].windows(2) {
            mesh.push_ccw([w[0], w[1], apex], ps);
        }

        let chain = &order[..apex_pos];
        let mut hull: Vec<usize> = if orient(pt(chain[0]), pt(chain[apex_pos - 1]), pt(apex)) > 0.0 {
            chain.iter().copied().chain(std::iter::once(apex)).collect()
        } else {
            std::iter::once(chain[0]).chain(std::iter::once(apex)).chain(chain[1..].iter().rev().copied()).collect()
        };

        for &v in &order[apex_pos + 1..] {
            let p = pt(v);
            let h = hull.len();
            let visible: Vec<bool> = (0..h).map(|e| orient(pt(hull[e]), pt(hull[(e + 1) % h]), p) < 0.0).collect();
            let start = (0..h)
                .find(|&e| visible[e] && !visible[(e + h - 1) % h])
                .ok_or_else(|| GeometryError::DegenerateInput(format!("point {v} sees no hull edge")))?;
            let run = (0..h).take_while(|&k| visible[(start + k) % h]).count();
            for k in 0..run {
                let (u, w) = (hull[(start + k) % h], hull[(start + k + 1) % h]);
                mesh.push_ccw([w, u, v], ps);
            }
            hull.rotate_left(start);
            hull.splice(1..run, std::iter::once(v));
        }
        Ok(mesh)
    }

    fn push_ccw(&mut self, [a, b, c]: [usize; 3], ps: &PointSet) {
        let tri = if orient(ps.point(a), ps.point(b), ps.point(c)) < 0.0 { [a, c, b] } else { [a, b, c] };
        let idx = self.triangles.len();
        self.triangles.push(tri);
        self.register(idx);
    }

    fn register(&mut self, idx: usize) {
        let [a, b, c] = self.triangles[idx];
        for (u, v) in [(a, b), (b, c), (c, a)] {
            self.half_edges.insert((u, v), idx);
        }
    }

    fn legalize(&mut self, ps: &PointSet) -> Result<(), GeometryError> {
        let mut stack: Vec<(usize, usize)> = self.half_edges.keys().copied().filter(|&(a, b)| a < b).collect();
        stack.sort_unstable();
        let limit = 50 * ps.len() * ps.len() + 1000;
        let mut flips = 0usize;
        while let Some((a, b)) = stack.pop() {
            let (Some(&t1), Some(&t2)) = (self.half_edges.get(&(a, b)), self.half_edges.get(&(b, a))) else {
                continue;
            };
            let c = third(self.triangles[t1], a, b);
            let d = third(self.triangles[t2], b, a);
            if incircle(ps.point(a), ps.point(b), ps.point(c), ps.point(d)) <= 0.0 {
                continue;
            }
            flips += 1;
            if flips > limit {
                return Err(GeometryError::DegenerateInput("edge flipping did not terminate".into()));
            }
            self.half_edges.remove(&(a, b));
            self.half_edges.remove(&(b, a));
            self.triangles[t1] = [a, d, c];
            self.triangles[t2] = [d, b, c];
            self.register(t1);
            self.register(t2);
            stack.extend([(a, d), (d, b), (b, c), (c, a)]);
        }
        Ok(())
    }

    fn check_degeneracy(&self, ps: &PointSet) -> Result<(), GeometryError> {
        let tol = ps.tolerance();
        for &[a, b, c] in &self.triangles {
            let (pa, pb, pc) = (ps.point(a), ps.point(b), ps.point(c));
            let longest = pa.dist(pb).max(pb.dist(pc)).max(pc.dist(pa));
            if orient(pa, pb, pc).abs() / longest <= tol {
                return Err(GeometryError::DegenerateInput(format!(
                    "points {a}, {b}, {c} are collinear within the degeneracy margin"
                )));
            }
        }
        let mut quads: Vec<(usize, usize)> = self.half_edges.keys().copied().filter(|&(a, b)| a < b).collect();
        quads.sort_unstable();
        for (a, b) in quads {
            let (Some(&t1), Some(&t2)) = (self.half_edges.get(&(a, b)), self.half_edges.get(&(b, a))) else {
                continue;
            };
            let c = third(self.triangles[t1], a, b);
            let d = third(self.triangles[t2], b, a);
            let circle = circumcircle(ps.point(a), ps.point(b), ps.point(c))?;
            if (circle.center.dist(ps.point(d)) - circle.radius).abs() <= tol {
                let mut quad = [a, b, c, d];
                quad.sort_unstable();
                return Err(GeometryError::CocircularDegeneracy(quad));
            }
        }
        Ok(())
    }
}

fn third(tri: [usize; 3], a: usize, b: usize) -> usize {
    tri.into_iter().find(|&v| v != a && v != b).expect("triangle has three distinct vertices")
}
