//! Planar primitives: points, angles from side lengths, circumcircles,
//! minimum enclosing radii and the Delaunay triangulation.
//!
//! Every degeneracy decision is made against a single relative margin
//! (`DEFAULT_EPSILON` unless a [`PointSet`] carries its own). Lengths are
//! compared against `epsilon * scale`, areas against `epsilon * scale^2`.

mod delaunay;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

pub(crate) use delaunay::delaunay_or_path;
pub use delaunay::{delaunay, delaunay_triangles, incircle, orient};

/// Default relative degeneracy margin.
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    fn sub(self, other: Point) -> (f64, f64) {
        (self.x - other.x, self.y - other.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// Indexed planar points with a relative degeneracy margin.
///
/// Construction rejects non-finite coordinates and pairs closer than
/// `epsilon` times the bounding-box diagonal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    points: Vec<Point>,
    epsilon: f64,
}

impl PointSet {
    pub fn new(points: Vec<Point>, epsilon: f64) -> Result<Self, GeometryError> {
        if let Some(index) = points.iter().position(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(GeometryError::NonFinite { index });
        }
        let set = PointSet { points, epsilon };
        let tol = set.tolerance();
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                if set.points[i].dist(set.points[j]) <= tol {
                    return Err(GeometryError::CoincidentPoints(i, j));
                }
            }
        }
        Ok(set)
    }

    pub fn with_default_epsilon(points: Vec<Point>) -> Result<Self, GeometryError> {
        Self::new(points, DEFAULT_EPSILON)
    }

    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self, GeometryError> {
        Self::with_default_epsilon(coords.iter().copied().map(Point::from).collect())
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.points[i].dist(self.points[j])
    }

    /// Bounding-box diagonal, or 0 for fewer than two points.
    pub fn diagonal(&self) -> f64 {
        let Some(first) = self.points.first() else {
            return 0.0;
        };
        let (mut lo, mut hi) = (*first, *first);
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        lo.dist(hi)
    }

    /// Absolute length tolerance: `epsilon` relative to the diagonal.
    pub fn tolerance(&self) -> f64 {
        let diag = self.diagonal();
        if diag > 0.0 {
            self.epsilon * diag
        } else {
            self.epsilon
        }
    }
}

/// An angle in `[0, π]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Angle(f64);

impl Angle {
    /// Clamps into `[0, π]`.
    pub fn new(radians: f64) -> Self {
        Angle(radians.clamp(0.0, PI))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn supplement(self) -> Angle {
        Angle(PI - self.0)
    }
}

/// Angle opposite side `c` in a triangle with sides `a`, `b`, `c`
/// (law of cosines).
pub fn angle_from_sides(a: f64, b: f64, c: f64) -> Result<Angle, GeometryError> {
    if !(a > 0.0 && b > 0.0) || c < 0.0 {
        return Err(GeometryError::NonPositiveSide { a, b });
    }
    let slack = DEFAULT_EPSILON * a.max(b).max(c);
    if c > a + b + slack || c < (a - b).abs() - slack {
        return Err(GeometryError::TriangleInequalityViolation { a, b, c });
    }
    let cos = ((a * a + b * b - c * c) / (2.0 * a * b)).clamp(-1.0, 1.0);
    Ok(Angle::new(cos.acos()))
}

/// Inscribed angle on the major arc of a circle of diameter `diameter`
/// cut by a chord of length `chord`.
///
/// The central angle ω satisfies `cos ω = 1 - 2 chord² / diameter²` and the
/// result is ω/2, evaluated as `asin(chord / diameter)` for accuracy at short
/// chords. The minor-arc inscribed angle is the supplement.
pub fn chord_inscribed_angle(chord: f64, diameter: f64) -> Result<Angle, GeometryError> {
    if chord.is_nan() || chord <= 0.0 {
        return Err(GeometryError::NonPositiveChord(chord));
    }
    if chord > diameter * (1.0 + DEFAULT_EPSILON) {
        return Err(GeometryError::ChordTooLong { chord, diameter });
    }
    Ok(Angle::new((chord / diameter).min(1.0).asin()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    /// Strict interior test, with `tol` as a dead band on the boundary.
    pub fn strictly_contains(&self, p: Point, tol: f64) -> bool {
        self.center.dist(p) < self.radius - tol
    }
}

/// Circle through three points.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Result<Circle, GeometryError> {
    let (bx, by) = b.sub(a);
    let (cx, cy) = c.sub(a);
    let scale = a.dist(b).max(a.dist(c)).max(b.dist(c));
    let d = 2.0 * (bx * cy - by * cx);
    if d.abs() <= 2.0 * DEFAULT_EPSILON * scale * scale {
        return Err(GeometryError::CollinearPoints);
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    Ok(Circle { center: Point::new(a.x + ux, a.y + uy), radius: ux.hypot(uy) })
}

pub fn circumradius(a: Point, b: Point, c: Point) -> Result<f64, GeometryError> {
    circumcircle(a, b, c).map(|circle| circle.radius)
}

/// Radius of the smallest disk containing the three points.
///
/// Three closed disks of radius ρ share a point exactly when this radius is
/// at most ρ.
pub fn min_enclosing_radius(a: Point, b: Point, c: Point) -> Result<f64, GeometryError> {
    let ab = a.dist(b);
    let bc = b.dist(c);
    let ca = c.dist(a);
    let scale = ab.max(bc).max(ca);
    if ab.min(bc).min(ca) <= DEFAULT_EPSILON * scale || scale == 0.0 {
        return Err(GeometryError::DegenerateInput("coincident points".into()));
    }
    if is_obtuse_at(a, b, c) || is_obtuse_at(b, c, a) || is_obtuse_at(c, a, b) {
        return Ok(0.5 * scale);
    }
    match circumradius(a, b, c) {
        Ok(r) => Ok(r),
        // Collinear within margin: the middle point sits at angle π.
        Err(GeometryError::CollinearPoints) => Ok(0.5 * scale),
        Err(e) => Err(e),
    }
}

/// Whether the angle at `apex` in triangle (apex, p, q) exceeds π/2.
pub fn is_obtuse_at(apex: Point, p: Point, q: Point) -> bool {
    let (ux, uy) = p.sub(apex);
    let (vx, vy) = q.sub(apex);
    ux * vx + uy * vy < 0.0
}

/// Cosine of the angle at `apex` in triangle (apex, p, q).
pub fn cos_angle_at(apex: Point, p: Point, q: Point) -> f64 {
    let (ux, uy) = p.sub(apex);
    let (vx, vy) = q.sub(apex);
    (ux * vx + uy * vy) / (ux.hypot(uy) * vx.hypot(vy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, SQRT_2};

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn angle_from_sides_examples() {
        assert!((angle_from_sides(3.0, 4.0, 5.0).unwrap().radians() - FRAC_PI_2).abs() < 1e-12);
        assert!((angle_from_sides(1.0, 1.0, 1.0).unwrap().radians() - FRAC_PI_3).abs() < 1e-12);
        assert_eq!(angle_from_sides(1.0, 1.0, 2.0).unwrap().radians(), PI);
    }

    #[test]
    fn angle_from_sides_rejects_impossible_triangles() {
        assert!(matches!(angle_from_sides(1.0, 1.0, 2.1), Err(GeometryError::TriangleInequalityViolation { .. })));
        assert!(matches!(angle_from_sides(3.0, 1.0, 1.5), Err(GeometryError::TriangleInequalityViolation { .. })));
        assert!(angle_from_sides(0.0, 1.0, 1.0).is_err());
        // rounding-level excess is absorbed by the slack
        assert_eq!(angle_from_sides(1.0, 1.0, 2.0 + 1e-12).unwrap().radians(), PI);
    }

    #[test]
    fn chord_angle_examples() {
        let q = 0.7;
        assert!((chord_inscribed_angle(q, q).unwrap().radians() - FRAC_PI_2).abs() < 1e-12);
        assert!((chord_inscribed_angle(q / SQRT_2, q).unwrap().radians() - FRAC_PI_4).abs() < 1e-12);
        assert!(chord_inscribed_angle(1e-12, q).unwrap().radians() < 1e-11);
        assert!(matches!(chord_inscribed_angle(1.1, 1.0), Err(GeometryError::ChordTooLong { .. })));
    }

    #[test]
    fn chord_angle_matches_law_of_cosines_form() {
        for k in 1..100 {
            let d = k as f64 / 100.0;
            let omega = (1.0 - 2.0 * d * d).clamp(-1.0, 1.0).acos();
            let theta = chord_inscribed_angle(d, 1.0).unwrap().radians();
            assert!((theta - omega / 2.0).abs() < 1e-7, "d = {d}");
        }
    }

    #[test]
    fn circumradius_examples() {
        let h = 3f64.sqrt() / 2.0;
        let r = circumradius(p(0.0, 0.0), p(1.0, 0.0), p(0.5, h)).unwrap();
        assert!((r - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        let r = circumradius(p(0.0, 0.0), p(3.0, 0.0), p(0.0, 4.0)).unwrap();
        assert!((r - 2.5).abs() < 1e-12);
        assert_eq!(circumradius(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)), Err(GeometryError::CollinearPoints));
    }

    #[test]
    fn circumcenter_is_equidistant() {
        let (a, b, c) = (p(0.1, 0.2), p(0.9, 0.4), p(0.3, 0.8));
        let circle = circumcircle(a, b, c).unwrap();
        for v in [a, b, c] {
            assert!((circle.center.dist(v) - circle.radius).abs() < 1e-12);
        }
    }

    #[test]
    fn min_enclosing_radius_examples() {
        let h = 3f64.sqrt() / 2.0;
        let r = min_enclosing_radius(p(0.0, 0.0), p(1.0, 0.0), p(0.5, h)).unwrap();
        assert!((r - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        let r = min_enclosing_radius(p(0.0, 0.0), p(2.0, 0.0), p(0.5, 0.3)).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
        let r = min_enclosing_radius(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
        assert!(min_enclosing_radius(p(0.0, 0.0), p(0.0, 0.0), p(1.0, 0.0)).is_err());
    }

    #[test]
    fn point_set_rejects_coincident_and_non_finite() {
        assert_eq!(
            PointSet::from_coords(&[(0.0, 0.0), (1.0, 1.0), (0.0, 1e-12)]),
            Err(GeometryError::CoincidentPoints(0, 2))
        );
        assert_eq!(PointSet::from_coords(&[(0.0, f64::NAN)]), Err(GeometryError::NonFinite { index: 0 }));
    }

    fn triangle() -> impl Strategy<Value = (Point, Point, Point)> {
        let coord = -10.0..10.0f64;
        (coord.clone(), coord.clone(), coord.clone(), coord.clone(), coord.clone(), coord)
            .prop_map(|(a, b, c, d, e, f)| (p(a, b), p(c, d), p(e, f)))
            .prop_filter("non-degenerate", |(a, b, c)| {
                let area = ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).abs();
                let s = a.dist(*b).max(a.dist(*c)).max(b.dist(*c));
                area > 1e-3 * s * s
            })
    }

    proptest! {
        #[test]
        fn angles_sum_to_pi((a, b, c) in triangle()) {
            let (x, y, z) = (b.dist(c), c.dist(a), a.dist(b));
            let sum = angle_from_sides(x, y, z).unwrap().radians()
                + angle_from_sides(y, z, x).unwrap().radians()
                + angle_from_sides(z, x, y).unwrap().radians();
            prop_assert!((sum - PI).abs() < 1e-9);
        }

        #[test]
        fn chord_angle_is_monotone(d1 in 1e-6..1.0f64, d2 in 1e-6..1.0f64) {
            let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
            prop_assert!(chord_inscribed_angle(lo, 1.0).unwrap() <= chord_inscribed_angle(hi, 1.0).unwrap());
        }

        #[test]
        fn enclosing_radius_bounded_by_circumradius((a, b, c) in triangle()) {
            let meb = min_enclosing_radius(a, b, c).unwrap();
            let r = circumradius(a, b, c).unwrap();
            prop_assert!(meb <= r * (1.0 + 1e-12));
            let max_angle = [cos_angle_at(a, b, c), cos_angle_at(b, c, a), cos_angle_at(c, a, b)]
                .into_iter()
                .map(|cos| cos.clamp(-1.0, 1.0).acos())
                .fold(0.0, f64::max);
            if max_angle <= FRAC_PI_2 {
                prop_assert!((meb - r).abs() <= 1e-12 * r);
            } else if max_angle > FRAC_PI_2 + 1e-6 {
                prop_assert!(meb < r);
            }
        }
    }
}
