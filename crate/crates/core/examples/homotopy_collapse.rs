//! Pair each surplus Delaunay-Čech triangle with its long edge and collapse
//! down to the alpha complex.

use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::{build_pairing, collapse_to_alpha};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ps = generate_points(&GeneratorConfig { seed: 2, n: 60, ..Default::default() })?.points;
    let q = 0.25;
    let pairing = build_pairing(&ps, q)?;
    println!("{} edge/triangle pairs", pairing.len());

    let trace = collapse_to_alpha(&ps, q)?;
    print!("{}", trace.to_text());
    println!("steps valid: {}", trace.validate().is_ok());
    println!("betti before {:?}, after {:?}", trace.start.betti(), trace.end.betti());
    Ok(())
}
