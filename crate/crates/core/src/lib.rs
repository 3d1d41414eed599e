//! Alpha shapes of planar point sets computed from pairwise distances
//! alone, together with coordinate-based reference constructions (alpha,
//! Čech, flag and Delaunay-Čech complexes) and a collapse-based check that
//! the Delaunay-Čech complex is homotopy equivalent to the alpha complex.
//!
//! The coordinate-free side only ever reads a [`DistanceGraph`]: the lengths
//! of the pairs closer than a communication range `r`. For every parameter
//! `0 < q ≤ r`, [`alpha_shape_local`] decides per edge, from the distances
//! among the edge's endpoints and their common neighbors, whether the edge
//! is on the alpha shape.
//!
//! ```
//! use coordfree_alpha::{alpha_shape_local, DistanceGraph, PointSet};
//!
//! let ps = PointSet::from_coords(&[(0.0, 0.0), (0.4, 0.0), (0.2, 0.3), (0.2, -0.3)]).unwrap();
//! let g = DistanceGraph::build(&ps, 1.0).unwrap();
//! let shape = alpha_shape_local(&g, 1.0).unwrap();
//! assert_eq!(shape.boundary_edges.len(), 4);
//! ```

pub mod collapse;
pub mod commands;
pub mod complex;
pub mod complexes;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod local;
pub mod svg;

pub use collapse::{build_pairing, collapse_to_alpha, verify_equivalence, CollapseTrace, EquivalenceReport};
pub use complex::{BettiPair, Complex2, Edge, Triangle};
pub use complexes::{alpha_complex, cech2, delaunay_cech, flag2, u_complex, ComplexFamily};
pub use geometry::{delaunay, Point, PointSet};
pub use graph::{DistanceGraph, LocalDistances};
pub use local::{alpha_shape_local, classify_edge, simulate_distributed, EdgeDecision, LocalShape};
