//! Simplicial complexes of dimension at most two, their boundaries and
//! mod-2 Betti numbers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::FormatError;

/// Unordered vertex pair, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must differ");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn vertices(self) -> [usize; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Unordered vertex triple, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle([usize; 3]);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        assert!(v[0] != v[1] && v[1] != v[2], "triangle vertices must differ");
        Triangle(v)
    }

    pub fn vertices(self) -> [usize; 3] {
        self.0
    }

    pub fn edges(self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge(a, b), Edge(a, c), Edge(b, c)]
    }

    pub fn has_edge(self, e: Edge) -> bool {
        self.0.contains(&e.0) && self.0.contains(&e.1)
    }

    /// Vertex not on `e`. Panics if `e` is not an edge of the triangle.
    pub fn opposite(self, e: Edge) -> usize {
        assert!(self.has_edge(e), "{e} is not an edge of {self}");
        self.0.into_iter().find(|&v| !e.contains(v)).unwrap()
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Complex2 {
    vertices: BTreeSet<usize>,
    edges: BTreeSet<Edge>,
    triangles: BTreeSet<Triangle>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiPair {
    pub b0: usize,
    pub b1: usize,
}

impl Complex2 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        Complex2 { vertices: vertices.into_iter().collect(), ..Self::default() }
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn triangles(&self) -> &BTreeSet<Triangle> {
        &self.triangles
    }

    pub fn insert_vertex(&mut self, v: usize) {
        self.vertices.insert(v);
    }

    /// Inserts the edge together with its endpoints.
    pub fn insert_edge(&mut self, e: Edge) {
        self.vertices.extend(e.vertices());
        self.edges.insert(e);
    }

    /// Inserts the triangle together with all of its faces.
    pub fn insert_triangle(&mut self, t: Triangle) {
        for e in t.edges() {
            self.insert_edge(e);
        }
        self.triangles.insert(t);
    }

    /// Removes an edge without touching its cofaces.
    pub fn remove_edge(&mut self, e: Edge) -> bool {
        self.edges.remove(&e)
    }

    /// Removes a triangle's interior.
    pub fn remove_triangle(&mut self, t: Triangle) -> bool {
        self.triangles.remove(&t)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn contains_triangle(&self, t: Triangle) -> bool {
        self.triangles.contains(&t)
    }

    /// Every face of every simplex is present.
    pub fn is_closed(&self) -> bool {
        self.edges.iter().all(|e| e.vertices().iter().all(|v| self.vertices.contains(v)))
            && self.triangles.iter().all(|t| t.edges().iter().all(|e| self.edges.contains(e)))
    }

    /// Simplex-wise inclusion.
    pub fn is_subcomplex_of(&self, other: &Complex2) -> bool {
        self.vertices.is_subset(&other.vertices)
            && self.edges.is_subset(&other.edges)
            && self.triangles.is_subset(&other.triangles)
    }

    /// Simplex-wise intersection.
    pub fn intersection(&self, other: &Complex2) -> Complex2 {
        Complex2 {
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
            triangles: self.triangles.intersection(&other.triangles).copied().collect(),
        }
    }

    /// Triangles of the complex having `e` as a face.
    pub fn cofaces(&self, e: Edge) -> Vec<Triangle> {
        self.triangles.iter().copied().filter(|t| t.has_edge(e)).collect()
    }

    /// Number of incident triangles for every edge.
    pub fn coface_counts(&self) -> BTreeMap<Edge, usize> {
        let mut counts: BTreeMap<Edge, usize> = self.edges.iter().map(|&e| (e, 0)).collect();
        for t in &self.triangles {
            for e in t.edges() {
                *counts.entry(e).or_default() += 1;
            }
        }
        counts
    }

    /// Vertices that are not a face of any edge.
    pub fn isolated_vertices(&self) -> BTreeSet<usize> {
        let mut isolated = self.vertices.clone();
        for e in &self.edges {
            isolated.remove(&e.0);
            isolated.remove(&e.1);
        }
        isolated
    }

    /// Edges incident to at most one triangle, their endpoints, and the
    /// isolated vertices. The result has no triangles.
    pub fn boundary_shape(&self) -> Complex2 {
        let mut boundary = Complex2::with_vertices(self.isolated_vertices());
        for (e, count) in self.coface_counts() {
            if count <= 1 {
                boundary.insert_edge(e);
            }
        }
        boundary
    }

    /// Betti numbers over the two-element field.
    pub fn betti(&self) -> BettiPair {
        let vertex_index: BTreeMap<usize, usize> = self.vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let edge_index: BTreeMap<Edge, usize> = self.edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();

        let d1 = self.edges.iter().map(|e| {
            let mut row = BitRow::zeros(vertex_index.len());
            row.set(vertex_index[&e.0]);
            row.set(vertex_index[&e.1]);
            row
        });
        let rank1 = gf2_rank(d1.collect());

        let d2 = self.triangles.iter().map(|t| {
            let mut row = BitRow::zeros(edge_index.len());
            for e in t.edges() {
                row.set(edge_index[&e]);
            }
            row
        });
        let rank2 = gf2_rank(d2.collect());

        BettiPair { b0: self.vertices.len() - rank1, b1: self.edges.len() - rank1 - rank2 }
    }

    /// Sorted `v` / `e` / `t` listing, one simplex per line.
    pub fn to_listing(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("v {v}\n"));
        }
        for e in &self.edges {
            out.push_str(&format!("e {} {}\n", e.0, e.1));
        }
        for t in &self.triangles {
            let [a, b, c] = t.0;
            out.push_str(&format!("t {a} {b} {c}\n"));
        }
        out
    }

    pub fn from_listing(text: &str) -> Result<Complex2, FormatError> {
        let mut complex = Complex2::new();
        for (lineno, line) in text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())) {
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let kind = fields.next().unwrap_or_default();
            let ids: Vec<usize> = fields
                .map(|f| f.parse().map_err(|_| FormatError::parse(lineno, format!("bad vertex id {f:?}"))))
                .collect::<Result<_, _>>()?;
            let distinct = |ids: &[usize]| ids.iter().collect::<BTreeSet<_>>().len() == ids.len();
            match (kind, ids.as_slice()) {
                ("v", &[v]) => complex.insert_vertex(v),
                ("e", &[a, b]) if distinct(&ids) => complex.insert_edge(Edge::new(a, b)),
                ("t", &[a, b, c]) if distinct(&ids) => complex.insert_triangle(Triangle::new(a, b, c)),
                _ => return Err(FormatError::parse(lineno, format!("malformed simplex line {line:?}"))),
            }
        }
        Ok(complex)
    }
}

#[derive(Clone, Debug)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, k: usize) {
        self.0[k / 64] ^= 1 << (k % 64);
    }

    fn leading(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn get(&self, k: usize) -> bool {
        self.0[k / 64] >> (k % 64) & 1 == 1
    }

    fn xor(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }
}

fn gf2_rank(rows: Vec<BitRow>) -> usize {
    // pivot column -> reduced row
    let mut pivots: BTreeMap<usize, BitRow> = BTreeMap::new();
    for mut row in rows {
        while let Some(lead) = row.leading() {
            match pivots.get(&lead) {
                Some(pivot) => row.xor(pivot),
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    debug_assert!(pivots.iter().all(|(&k, r)| r.get(k)));
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn filled_triangle() -> Complex2 {
        let mut k = Complex2::new();
        k.insert_triangle(Triangle::new(0, 1, 2));
        k
    }

    #[test]
    fn insertion_closes_faces() {
        let k = filled_triangle();
        assert!(k.is_closed());
        assert_eq!(k.vertices().len(), 3);
        assert_eq!(k.edges().len(), 3);
    }

    #[test]
    fn boundary_of_one_triangle() {
        let b = filled_triangle().boundary_shape();
        assert_eq!(b.edges().len(), 3);
        assert_eq!(b.vertices().len(), 3);
        assert!(b.triangles().is_empty());
    }

    #[test]
    fn boundary_of_two_triangles_drops_shared_edge() {
        let mut k = filled_triangle();
        k.insert_triangle(Triangle::new(1, 2, 3));
        let b = k.boundary_shape();
        assert_eq!(b.edges().len(), 4);
        assert!(!b.contains_edge(Edge::new(1, 2)));
    }

    #[test]
    fn boundary_keeps_isolated_vertex() {
        let b = Complex2::with_vertices([7]).boundary_shape();
        assert_eq!(b.vertices().iter().copied().collect::<Vec<_>>(), vec![7]);
    }

    #[test]
    fn betti_examples() {
        assert_eq!(filled_triangle().betti(), BettiPair { b0: 1, b1: 0 });
        let mut hollow = filled_triangle();
        hollow.remove_triangle(Triangle::new(0, 1, 2));
        assert_eq!(hollow.betti(), BettiPair { b0: 1, b1: 1 });
        assert_eq!(Complex2::with_vertices([0, 1]).betti(), BettiPair { b0: 2, b1: 0 });
        assert_eq!(Complex2::new().betti(), BettiPair { b0: 0, b1: 0 });
    }

    #[test]
    fn betti_of_octahedron_surface() {
        // sphere: b0 = 1, b1 = 0 (b2 = 1 not tracked)
        let mut k = Complex2::new();
        for (a, b, c) in [(0, 2, 4), (0, 2, 5), (0, 3, 4), (0, 3, 5), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5)] {
            k.insert_triangle(Triangle::new(a, b, c));
        }
        assert_eq!(k.betti(), BettiPair { b0: 1, b1: 0 });
    }

    #[test]
    fn betti_of_annulus() {
        // square ring of 8 vertices, triangulated
        let mut k = Complex2::new();
        for i in 0..4 {
            let (o, o2, n, n2) = (i, (i + 1) % 4, i + 4, (i + 1) % 4 + 4);
            k.insert_triangle(Triangle::new(o, o2, n));
            k.insert_triangle(Triangle::new(o2, n, n2));
        }
        assert_eq!(k.betti(), BettiPair { b0: 1, b1: 1 });
    }

    #[test]
    fn listing_round_trip() {
        let mut k = filled_triangle();
        k.insert_edge(Edge::new(2, 5));
        k.insert_vertex(9);
        let text = k.to_listing();
        assert!(text.starts_with("v 0\n"));
        assert!(text.contains("e 2 5\n"));
        assert!(text.ends_with("t 0 1 2\n"));
        assert_eq!(Complex2::from_listing(&text).unwrap(), k);
        assert!(Complex2::from_listing("e 1 1\n").is_err());
        assert!(Complex2::from_listing("q 1\n").is_err());
    }

    #[test]
    fn opposite_vertex() {
        assert_eq!(Triangle::new(4, 1, 9).opposite(Edge::new(9, 1)), 4);
    }
}
