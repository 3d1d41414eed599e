//! Plain-text point and edge-list files.
//!
//! Point file: a header line `n`, then `n` lines `x y`.
//! Edge file: a header line `n r`, then one `i j dist` line per edge.
//! Blank lines and lines starting with `#` are ignored. Reals are written in
//! shortest round-trip form, so a write/parse cycle is bit-exact.

use crate::error::FormatError;
use crate::geometry::{Point, PointSet};
use crate::graph::DistanceGraph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, line)| (k + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn field<T: std::str::FromStr>(line: usize, raw: Option<&str>, what: &str) -> Result<T, FormatError> {
    let raw = raw.ok_or_else(|| FormatError::parse(line, format!("missing {what}")))?;
    raw.parse().map_err(|_| FormatError::parse(line, format!("bad {what} {raw:?}")))
}

fn expect_end<'a>(line: usize, mut rest: impl Iterator<Item = &'a str>) -> Result<(), FormatError> {
    match rest.next() {
        Some(extra) => Err(FormatError::parse(line, format!("unexpected field {extra:?}"))),
        None => Ok(()),
    }
}

pub fn write_points(ps: &PointSet) -> String {
    let mut out = format!("{}\n", ps.len());
    for p in ps.points() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}

pub fn parse_points(text: &str, epsilon: f64) -> Result<PointSet, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::parse(1, "missing header"))?;
    let mut fields = header.split_whitespace();
    let n: usize = field(hl, fields.next(), "point count")?;
    expect_end(hl, fields)?;
    let mut points = Vec::with_capacity(n);
    for (line, body) in lines {
        let mut fields = body.split_whitespace();
        let x: f64 = field(line, fields.next(), "x coordinate")?;
        let y: f64 = field(line, fields.next(), "y coordinate")?;
        expect_end(line, fields)?;
        points.push(Point::new(x, y));
    }
    if points.len() != n {
        return Err(FormatError::parse(hl, format!("header declares {n} points, found {}", points.len())));
    }
    Ok(PointSet::new(points, epsilon)?)
}

pub fn write_edge_list(g: &DistanceGraph) -> String {
    use crate::graph::LocalDistances;
    let mut out = format!("{} {}\n", g.n(), g.range());
    for (e, d) in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.lo(), e.hi(), d));
    }
    out
}

pub fn parse_edge_list(text: &str, epsilon: f64) -> Result<DistanceGraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::parse(1, "missing header"))?;
    let mut fields = header.split_whitespace();
    let n: usize = field(hl, fields.next(), "vertex count")?;
    let r: f64 = field(hl, fields.next(), "range")?;
    expect_end(hl, fields)?;
    let mut records = Vec::new();
    for (line, body) in lines {
        let mut fields = body.split_whitespace();
        let i: usize = field(line, fields.next(), "vertex id")?;
        let j: usize = field(line, fields.next(), "vertex id")?;
        let d: f64 = field(line, fields.next(), "distance")?;
        expect_end(line, fields)?;
        records.push((i, j, d));
    }
    Ok(DistanceGraph::load(records, n, r, epsilon)?)
}
