//! Angles from side lengths, circle geometry and the Delaunay triangulation
//! of a small point set.

use coordfree_alpha::geometry::{
    angle_from_sides, chord_inscribed_angle, circumradius, delaunay, min_enclosing_radius, Point, PointSet,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let right = angle_from_sides(3.0, 4.0, 5.0)?;
    println!("angle opposite the hypotenuse of a 3-4-5 triangle: {:.6} rad", right.radians());

    // a chord of length d in a circle of diameter q subtends asin(d/q)
    let theta = chord_inscribed_angle(0.5, 1.0)?;
    println!("inscribed angle of chord 0.5 in a unit-diameter circle: {:.6} rad", theta.radians());

    let (a, b, c) = (Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 0.2));
    println!(
        "obtuse triangle: circumradius {:.4}, smallest enclosing radius {:.4}",
        circumradius(a, b, c)?,
        min_enclosing_radius(a, b, c)?
    );

    let ps = PointSet::from_coords(&[(0.0, 0.0), (1.0, 0.1), (0.4, 0.9), (0.45, 0.4), (1.2, 0.8)])?;
    let dt = delaunay(&ps)?;
    println!("Delaunay triangulation: {} edges, {} triangles", dt.edges().len(), dt.triangles().len());
    for t in dt.triangles() {
        println!("  {t}");
    }
    Ok(())
}
