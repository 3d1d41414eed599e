//! SVG figures: the union of disks, complexes drawn as filled triangles and
//! edges, and the vertices. Output is plain text with fixed precision, so
//! identical inputs render byte-identical files.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::complex::{Complex2, Edge};
use crate::geometry::PointSet;

const SIZE: f64 = 800.0;

struct Canvas {
    min_x: f64,
    max_y: f64,
    scale: f64,
    width: f64,
    height: f64,
    body: String,
}

impl Canvas {
    fn new(ps: &PointSet, pad: f64) -> Self {
        let (mut min_x, mut min_y, mut max_x, mut max_y) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
        if let Some(first) = ps.points().first() {
            (min_x, min_y, max_x, max_y) = (first.x, first.y, first.x, first.y);
            for p in ps.points() {
                min_x = min_x.min(p.x);
                min_y = min_y.min(p.y);
                max_x = max_x.max(p.x);
                max_y = max_y.max(p.y);
            }
        }
        let pad = pad.max(1e-3 * (max_x - min_x).max(max_y - min_y)).max(1e-9);
        let (min_x, min_y, max_x, max_y) = (min_x - pad, min_y - pad, max_x + pad, max_y + pad);
        let scale = SIZE / (max_x - min_x).max(max_y - min_y);
        Canvas {
            min_x,
            max_y,
            scale,
            width: (max_x - min_x) * scale,
            height: (max_y - min_y) * scale,
            body: String::new(),
        }
    }

    fn x(&self, x: f64) -> f64 {
        (x - self.min_x) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        (self.max_y - y) * self.scale
    }

    fn open(&mut self, id: &str, attrs: &str) {
        let _ = writeln!(self.body, "<g id=\"{id}\" {attrs}>");
    }

    fn close(&mut self) {
        self.body.push_str("</g>\n");
    }

    /// Opaque disks inside a translucent group, so overlaps shade evenly.
    fn disks(&mut self, ps: &PointSet, radius: f64) {
        self.open("disks", "fill=\"#9ecae1\" opacity=\"0.45\"");
        for p in ps.points() {
            let (cx, cy, r) = (self.x(p.x), self.y(p.y), radius * self.scale);
            let _ = writeln!(self.body, "<circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{r:.3}\"/>");
        }
        self.close();
    }

    fn complex(&mut self, id: &str, ps: &PointSet, k: &Complex2, fill: &str, stroke: &str, width: f64) {
        self.open(id, &format!("fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"{width}\""));
        for t in k.triangles() {
            let corners: Vec<String> = t
                .vertices()
                .iter()
                .map(|&v| format!("{:.3},{:.3}", self.x(ps.point(v).x), self.y(ps.point(v).y)))
                .collect();
            let _ = writeln!(self.body, "<polygon points=\"{}\" stroke=\"none\"/>", corners.join(" "));
        }
        self.close();
        self.edges(&format!("{id}-edges"), ps, k.edges(), stroke, width);
    }

    fn edges(&mut self, id: &str, ps: &PointSet, edges: &BTreeSet<Edge>, stroke: &str, width: f64) {
        self.open(id, &format!("stroke=\"{stroke}\" stroke-width=\"{width}\" stroke-linecap=\"round\""));
        for e in edges {
            let (a, b) = (ps.point(e.lo()), ps.point(e.hi()));
            let (x1, y1, x2, y2) = (self.x(a.x), self.y(a.y), self.x(b.x), self.y(b.y));
            let _ = writeln!(self.body, "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\"/>");
        }
        self.close();
    }

    fn vertices(&mut self, ps: &PointSet) {
        self.open("vertices", "fill=\"#222222\"");
        for p in ps.points() {
            let (cx, cy) = (self.x(p.x), self.y(p.y));
            let _ = writeln!(self.body, "<circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"3\"/>");
        }
        self.close();
    }

    fn finish(self, title: &str) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.3} {h:.3}\">\n\
             <title>{title}</title>\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{body}</svg>\n",
            w = self.width,
            h = self.height,
            body = self.body,
        )
    }
}

/// Union of radius-`q/2` disks, the alpha complex when available, and the
/// boundary edges on top.
pub fn shape_svg(ps: &PointSet, q: f64, boundary: &BTreeSet<Edge>, alpha: Option<&Complex2>) -> String {
    let mut canvas = Canvas::new(ps, 0.5 * q);
    canvas.disks(ps, 0.5 * q);
    if let Some(alpha) = alpha {
        canvas.complex("alpha", ps, alpha, "#fdd49e", "#bbbbbb", 1.0);
    }
    canvas.edges("boundary", ps, boundary, "#d7301f", 2.5);
    canvas.vertices(ps);
    canvas.finish(&format!("alpha shape, q = {q}"))
}

/// Union of disks with the Delaunay-Čech complex under the alpha complex.
pub fn equivalence_svg(ps: &PointSet, q: f64, alpha: &Complex2, delaunay_cech: &Complex2) -> String {
    let mut canvas = Canvas::new(ps, 0.5 * q);
    canvas.disks(ps, 0.5 * q);
    canvas.complex("delaunay-cech", ps, delaunay_cech, "#fc8d59", "#e34a33", 1.5);
    canvas.complex("alpha", ps, alpha, "#4393c3", "#08519c", 1.5);
    canvas.vertices(ps);
    canvas.finish(&format!("alpha complex over Delaunay-Cech complex, q = {q}"))
}
