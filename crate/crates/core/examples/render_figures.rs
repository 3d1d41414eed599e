//! Write the two figures for one instance into a directory (default
//! `figures/`).

use std::fs;
use std::path::PathBuf;

use coordfree_alpha::generate::{generate_points, GeneratorConfig};
use coordfree_alpha::svg::{equivalence_svg, shape_svg};
use coordfree_alpha::{alpha_complex, alpha_shape_local, delaunay_cech, DistanceGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    fs::create_dir_all(&dir)?;
    let ps = generate_points(&GeneratorConfig { seed: 1, n: 60, ..Default::default() })?.points;
    let q = 0.2;

    let shape = alpha_shape_local(&DistanceGraph::build(&ps, 0.25)?, q)?;
    let alpha = alpha_complex(&ps, q)?;
    let dc = delaunay_cech(&ps, q)?;
    fs::write(dir.join("shape.svg"), shape_svg(&ps, q, &shape.boundary_edges, Some(&alpha)))?;
    fs::write(dir.join("equivalence.svg"), equivalence_svg(&ps, q, &alpha, &dc))?;
    println!("wrote {}/shape.svg and {}/equivalence.svg", dir.display(), dir.display());
    Ok(())
}
