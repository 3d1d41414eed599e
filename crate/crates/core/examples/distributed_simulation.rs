//! Two rounds of neighbor messages give every node the table it needs;
//! nodes then decide their edges independently.

use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::local::audit_locality;
use coordfree_alpha::{alpha_shape_local, simulate_distributed, DistanceGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ps = generate_points(&GeneratorConfig { seed: 11, n: 60, ..Default::default() })?.points;
    let graph = DistanceGraph::build(&ps, 0.25)?;
    let q = 0.25;

    let (shape, stats) = simulate_distributed(&graph, q)?;
    println!("rounds {}, messages {}, table entries sent {}", stats.rounds, stats.messages, stats.payload_entries);
    let busiest = stats.per_node_messages.iter().max_by_key(|(_, &m)| m);
    if let Some((node, m)) = busiest {
        println!("busiest node {node} sent {m} messages");
    }
    println!("same verdicts as the centralized run: {}", shape.verdicts() == alpha_shape_local(&graph, q)?.verdicts());

    let audit = audit_locality(&graph, q)?;
    println!(
        "locality audit: {} edges, {} distance reads, {} violations",
        audit.edges_checked,
        audit.reads,
        audit.violations.len()
    );
    Ok(())
}
