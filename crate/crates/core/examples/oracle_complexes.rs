//! Build the family of complexes for one instance and print sizes and
//! Betti numbers along the chain alpha ⊆ Delaunay-Čech ⊆ U ⊆ Delaunay.

use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::{Complex2, ComplexFamily};

fn row(name: &str, k: &Complex2) {
    let b = k.betti();
    println!(
        "{name:<14} {:>4} {:>5} {:>5}   b0={} b1={}",
        k.vertices().len(),
        k.edges().len(),
        k.triangles().len(),
        b.b0,
        b.b1
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ps = generate_points(&GeneratorConfig { seed: 5, n: 60, ..Default::default() })?.points;
    let family = ComplexFamily::build(&ps, 0.2)?;
    println!("{:<14} {:>4} {:>5} {:>5}", "complex", "V", "E", "T");
    row("alpha", &family.alpha);
    row("delaunay-cech", &family.delaunay_cech);
    row("U", &family.u);
    row("delaunay", &family.delaunay);
    row("cech", &family.cech);
    row("flag", &family.flag);
    println!(
        "chain holds: {}",
        family.alpha.is_subcomplex_of(&family.delaunay_cech)
            && family.delaunay_cech.is_subcomplex_of(&family.u)
            && family.u.is_subcomplex_of(&family.delaunay)
    );
    Ok(())
}
