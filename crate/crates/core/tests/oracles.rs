//! Independent brute-force oracles against the library constructions.

use std::collections::BTreeSet;

use coordfree_alpha::complex::{Complex2, Edge, Triangle};
use coordfree_alpha::complexes::nerve_alpha_complex;
use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::geometry::{circumcircle, delaunay, Point, PointSet};
use coordfree_alpha::graph::LocalDistances;
use coordfree_alpha::local::{classify_edge, classify_edge_in_order};
use coordfree_alpha::{alpha_complex, alpha_shape_local, delaunay_cech, ComplexFamily, DistanceGraph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MARGIN: f64 = 1e-9;

fn instance(seed: u64, n: usize) -> PointSet {
    generate_points(&GeneratorConfig { seed, n, ..Default::default() }).unwrap().points
}

/// Every triple whose circumcircle holds no other point.
fn brute_delaunay(ps: &PointSet) -> BTreeSet<Triangle> {
    let n = ps.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let Ok(c) = circumcircle(ps.point(i), ps.point(j), ps.point(k)) else { continue };
                let empty =
                    (0..n).filter(|&m| m != i && m != j && m != k).all(|m| ps.point(m).dist(c.center) > c.radius);
                if empty {
                    out.insert(Triangle::new(i, j, k));
                }
            }
        }
    }
    out
}

/// Centers of the two circles of diameter `q` through `a` and `b`.
fn circle_centers(a: Point, b: Point, q: f64) -> [Point; 2] {
    let m = a.midpoint(b);
    let half = 0.5 * a.dist(b);
    let h = (0.25 * q * q - half * half).max(0.0).sqrt();
    let (ux, uy) = ((b.y - a.y) / (2.0 * half), (a.x - b.x) / (2.0 * half));
    [Point::new(m.x + h * ux, m.y + h * uy), Point::new(m.x - h * ux, m.y - h * uy)]
}

/// Edges of length at most `q` with an empty circle of diameter `q` on
/// either side, or `None` when some point sits on one of the circles.
fn brute_boundary(ps: &PointSet, q: f64) -> Option<BTreeSet<Edge>> {
    let n = ps.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if ps.dist(i, j) > q {
                continue;
            }
            let mut exposed = false;
            for c in circle_centers(ps.point(i), ps.point(j), q) {
                let mut empty = true;
                for m in (0..n).filter(|&m| m != i && m != j) {
                    let d = ps.point(m).dist(c) - 0.5 * q;
                    if d.abs() <= MARGIN {
                        return None;
                    }
                    empty &= d > 0.0;
                }
                exposed |= empty;
            }
            if exposed {
                out.insert(Edge::new(i, j));
            }
        }
    }
    Some(out)
}

fn euler(k: &Complex2) -> i64 {
    k.vertices().len() as i64 - k.edges().len() as i64 + k.triangles().len() as i64
}

#[test]
fn delaunay_matches_empty_circle_triples() {
    for seed in 0..40 {
        let ps = instance(seed, 30);
        let dt = delaunay(&ps).unwrap();
        assert_eq!(dt.triangles(), &brute_delaunay(&ps), "seed {seed}");
    }
}

#[test]
fn local_matches_circle_oracle_for_three_parameters() {
    let r = 0.25;
    let mut compared = 0;
    for seed in 0..60 {
        let ps = instance(seed, 60);
        let graph = DistanceGraph::build(&ps, r).unwrap();
        for q in [r, 0.8 * r, 0.5 * r] {
            let Some(expected) = brute_boundary(&ps, q) else { continue };
            let shape = alpha_shape_local(&graph, q).unwrap();
            assert_eq!(shape.boundary_edges, expected, "seed {seed} q {q}");
            compared += 1;
        }
    }
    assert!(compared >= 170, "too many near-degenerate instances: {compared}");
}

#[test]
fn shuffled_neighbor_order_keeps_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for seed in 0..20 {
        let ps = instance(seed, 60);
        let graph = DistanceGraph::build(&ps, 0.25).unwrap();
        for (e, d) in graph.edges() {
            if d > 0.2 {
                continue;
            }
            let base = classify_edge(&graph, e.lo(), e.hi(), 0.2).unwrap();
            let mut order = graph.common_neighbors(e.lo(), e.hi());
            for _ in 0..4 {
                order.shuffle(&mut rng);
                let shuffled = classify_edge_in_order(&graph, e.lo(), e.hi(), 0.2, &order).unwrap();
                assert_eq!(shuffled.verdict, base.verdict, "seed {seed} edge {e} order {order:?}");
            }
        }
    }
}

#[test]
fn coordinate_free_input_ignores_rigid_motion() {
    let ps = instance(4, 50);
    let (s, c) = (0.6f64.sin(), 0.6f64.cos());
    let moved: Vec<Point> =
        ps.points().iter().map(|p| Point::new(c * p.x - s * p.y + 3.0, s * p.x + c * p.y - 1.0)).collect();
    let moved = PointSet::new(moved, ps.epsilon()).unwrap();
    let a = alpha_shape_local(&DistanceGraph::build(&ps, 0.25).unwrap(), 0.2).unwrap();
    let b = alpha_shape_local(&DistanceGraph::build(&moved, 0.25).unwrap(), 0.2).unwrap();
    assert_eq!(a.verdicts(), b.verdicts());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn delaunay_is_empty_circle_triangulation(seed in 0u64..10_000, n in 3usize..24) {
        let ps = instance(seed, n);
        let dt = delaunay(&ps).unwrap();
        prop_assert_eq!(dt.triangles(), &brute_delaunay(&ps));
        // triangulated disk: V - E + T = 1
        prop_assert_eq!(euler(&dt), 1);
    }

    #[test]
    fn nerve_route_matches_delaunay_route(seed in 0u64..10_000, n in 3usize..40, scale in 0.3f64..1.2) {
        let ps = instance(seed, n);
        let q = 0.25 * scale;
        prop_assert_eq!(nerve_alpha_complex(&ps, q).unwrap(), alpha_complex(&ps, q).unwrap());
    }

    #[test]
    fn chain_and_betti_invariants(seed in 0u64..10_000, n in 3usize..50, scale in 0.3f64..1.0) {
        let ps = instance(seed, n);
        let q = 0.25 * scale;
        let family = ComplexFamily::build(&ps, q).unwrap();
        prop_assert!(family.alpha.is_subcomplex_of(&family.delaunay_cech));
        prop_assert!(family.delaunay_cech.is_subcomplex_of(&family.u));
        prop_assert!(family.u.is_subcomplex_of(&family.delaunay));
        prop_assert!(family.cech.is_subcomplex_of(&family.flag));
        // planar subcomplexes of the triangulation carry no 2-cycles
        for k in [&family.alpha, &family.delaunay_cech, &family.u] {
            let b = k.betti();
            prop_assert_eq!(b.b0 as i64 - b.b1 as i64, euler(k));
        }
        let g = DistanceGraph::build(&ps, q).unwrap();
        prop_assert_eq!(family.alpha.betti().b0, g.component_count());
        prop_assert_eq!(family.alpha.betti(), delaunay_cech(&ps, q).unwrap().betti());
    }

    #[test]
    fn edge_list_round_trip_preserves_shape(seed in 0u64..10_000, n in 0usize..40) {
        use coordfree_alpha::io::{parse_edge_list, write_edge_list};
        let ps = instance(seed, n);
        let g = DistanceGraph::build(&ps, 0.25).unwrap();
        let back = parse_edge_list(&write_edge_list(&g), ps.epsilon()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(alpha_shape_local(&back, 0.2).unwrap(), alpha_shape_local(&g, 0.2).unwrap());
    }
}
