//! Classify every edge of a random instance from distances alone and list
//! why each boundary edge was kept.

use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::local::{alpha_shape_local, Verdict};
use coordfree_alpha::DistanceGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let generated = generate_points(&GeneratorConfig { seed: 7, n: 40, ..Default::default() })?;
    let graph = DistanceGraph::build(&generated.points, 0.25)?;
    let shape = alpha_shape_local(&graph, 0.2)?;

    println!("{} edges within q, {} on the boundary", shape.decisions.len(), shape.boundary_edges.len());
    for decision in shape.decisions.values().filter(|d| d.verdict == Verdict::Boundary) {
        println!("  {} {:?} witnesses {:?}", decision.edge, decision.reason, decision.evidence);
    }
    println!("boundary vertices: {:?}", shape.boundary_vertices);
    Ok(())
}
