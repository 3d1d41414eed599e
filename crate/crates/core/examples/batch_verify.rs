//! Run the full check suite over a few seeds and print any failing check.

use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::verify_equivalence;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for seed in 1..=10 {
        let ps = generate_points(&GeneratorConfig { seed, n: 60, ..Default::default() })?.points;
        for q in [0.25, 0.2, 0.125] {
            let report = verify_equivalence(&ps, q);
            let status = if report.degenerate {
                "skipped"
            } else if report.passed() {
                "pass"
            } else {
                "FAIL"
            };
            println!(
                "seed {seed:>2} q={q:<5} {status:<7} betti {:?} pairs {:?}",
                report.betti_alpha.map(|b| (b.b0, b.b1)),
                report.pairing_size
            );
            for check in report.failures() {
                println!("    {}: {}", check.name, check.detail.as_deref().unwrap_or(""));
            }
        }
    }
    Ok(())
}
