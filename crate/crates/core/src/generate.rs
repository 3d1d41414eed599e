//! Seeded random instances in general position.
//!
//! Points are drawn uniformly from a box. Any configuration within the
//! degeneracy margin of coincident, collinear or (Delaunay-relevant)
//! cocircular points is repaired by redrawing the highest-indexed offending
//! point, and each repair is logged.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GeometryError;
use crate::geometry::{delaunay_triangles, orient, Point, PointSet, DEFAULT_EPSILON};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub min: Point,
    pub max: Point,
}

impl Default for Domain {
    fn default() -> Self {
        Domain { min: Point::new(0.0, 0.0), max: Point::new(1.0, 1.0) }
    }
}

impl Domain {
    fn is_valid(&self) -> bool {
        self.min.x < self.max.x && self.min.y < self.max.y && self.max.x.is_finite() && self.max.y.is_finite()
    }

    fn sample(&self, rng: &mut impl Rng) -> Point {
        Point::new(rng.gen_range(self.min.x..self.max.x), rng.gen_range(self.min.y..self.max.y))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n: usize,
    pub domain: Domain,
    pub epsilon: f64,
    /// Overwrite the first four points with a small cocircular quadruple
    /// before repair, to exercise the perturbation path.
    pub inject_degeneracy: bool,
    pub max_attempts: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 1,
            n: 60,
            domain: Domain::default(),
            epsilon: DEFAULT_EPSILON,
            inject_degeneracy: false,
            max_attempts: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Perturbation {
    pub attempt: usize,
    pub kind: String,
    pub indices: Vec<usize>,
    pub moved: usize,
    pub from: Point,
    pub to: Point,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Generated {
    pub points: PointSet,
    pub perturbations: Vec<Perturbation>,
}

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("invalid domain {0:?}")]
    InvalidDomain(Domain),
    #[error("still degenerate after {0} perturbation attempts")]
    Exhausted(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

pub fn generate_points(config: &GeneratorConfig) -> Result<Generated, GenerateError> {
    if !config.domain.is_valid() {
        return Err(GenerateError::InvalidDomain(config.domain));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut points: Vec<Point> = (0..config.n).map(|_| config.domain.sample(&mut rng)).collect();
    if config.inject_degeneracy && config.n >= 4 {
        let d = config.domain;
        let center = d.min.midpoint(d.max);
        let radius = 0.01 * (d.max.x - d.min.x).min(d.max.y - d.min.y);
        for (k, angle) in [0.3f64, 1.9, 3.4, 5.0].into_iter().enumerate() {
            points[k] = Point::new(center.x + radius * angle.cos(), center.y + radius * angle.sin());
        }
    }

    let mut perturbations = Vec::new();
    for attempt in 0..=config.max_attempts {
        let Some((kind, indices)) = find_degeneracy(&points, config.epsilon) else {
            return Ok(Generated { points: PointSet::new(points, config.epsilon)?, perturbations });
        };
        if attempt == config.max_attempts {
            break;
        }
        let moved = *indices.iter().max().expect("degeneracy names at least one point");
        let from = points[moved];
        let to = config.domain.sample(&mut rng);
        points[moved] = to;
        perturbations.push(Perturbation { attempt, kind: kind.to_string(), indices, moved, from, to });
    }
    Err(GenerateError::Exhausted(config.max_attempts))
}

/// First degeneracy found, as a kind and the offending indices.
pub fn find_degeneracy(points: &[Point], epsilon: f64) -> Option<(&'static str, Vec<usize>)> {
    let n = points.len();
    let tol = match PointSet::new(points.to_vec(), epsilon) {
        Ok(ps) => ps.tolerance(),
        Err(GeometryError::CoincidentPoints(i, j)) => return Some(("coincident", vec![i, j])),
        Err(_) => return Some(("non-finite", vec![n.saturating_sub(1)])),
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (points[i], points[j], points[k]);
                let longest = a.dist(b).max(b.dist(c)).max(c.dist(a));
                if orient(a, b, c).abs() / longest <= tol {
                    return Some(("collinear", vec![i, j, k]));
                }
            }
        }
    }
    if n >= 3 {
        let ps = PointSet::new(points.to_vec(), epsilon).ok()?;
        match delaunay_triangles(&ps) {
            Ok(_) => {}
            Err(GeometryError::CocircularDegeneracy(quad)) => return Some(("cocircular", quad.to_vec())),
            Err(_) => return Some(("triangulation", vec![n - 1])),
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_instance() {
        let generated = generate_points(&GeneratorConfig { n: 0, ..Default::default() }).unwrap();
        assert!(generated.points.is_empty());
    }

    #[test]
    fn deterministic_per_seed() {
        let config = GeneratorConfig { seed: 1, n: 60, ..Default::default() };
        let a = generate_points(&config).unwrap();
        let b = generate_points(&config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.points.len(), 60);
        let other = generate_points(&GeneratorConfig { seed: 2, ..config }).unwrap();
        assert_ne!(a.points, other.points);
    }

    #[test]
    fn injected_cocircular_points_are_perturbed() {
        let config = GeneratorConfig { seed: 1, n: 60, inject_degeneracy: true, ..Default::default() };
        let generated = generate_points(&config).unwrap();
        assert!(generated.perturbations.iter().any(|p| p.kind == "cocircular"), "{:?}", generated.perturbations);
        assert!(find_degeneracy(generated.points.points(), config.epsilon).is_none());
    }

    #[test]
    fn collinear_triple_is_found() {
        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 1.0), Point::new(2.0, 2.0), Point::new(0.0, 1.0)];
        assert_eq!(find_degeneracy(&pts, DEFAULT_EPSILON), Some(("collinear", vec![0, 1, 2])));
    }

    #[test]
    fn invalid_domain() {
        let domain = Domain { min: Point::new(1.0, 0.0), max: Point::new(0.0, 1.0) };
        assert!(matches!(
            generate_points(&GeneratorConfig { domain, ..Default::default() }),
            Err(GenerateError::InvalidDomain(_))
        ));
    }
}
