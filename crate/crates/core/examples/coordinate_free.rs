//! The same alpha shape from an edge list with no coordinates: write the
//! distance graph, throw the points away, and classify from the file.

use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::geometry::DEFAULT_EPSILON;
use coordfree_alpha::io::{parse_edge_list, write_edge_list};
use coordfree_alpha::{alpha_complex, alpha_shape_local, DistanceGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ps = generate_points(&GeneratorConfig { seed: 3, n: 50, ..Default::default() })?.points;
    let text = write_edge_list(&DistanceGraph::build(&ps, 0.25)?);
    println!("edge list header: {}", text.lines().next().unwrap_or_default());

    let graph = parse_edge_list(&text, DEFAULT_EPSILON)?;
    let q = 0.2;
    let shape = alpha_shape_local(&graph, q)?;

    let oracle = alpha_complex(&ps, q)?.boundary_shape();
    println!("local boundary edges: {}", shape.boundary_edges.len());
    println!("agrees with the Delaunay construction: {}", &shape.boundary_edges == oracle.edges());
    Ok(())
}
