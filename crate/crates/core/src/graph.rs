//! The geometric graph `G_r`: vertices plus the lengths of every pair at
//! distance at most `r`. This is all the coordinate-free algorithm sees.

use std::collections::BTreeMap;

use crate::complex::Edge;
use crate::error::GraphError;
use crate::geometry::{PointSet, DEFAULT_EPSILON};

/// Read access to pairwise distances, as seen by one observer.
///
/// The boundary test is written against this trait so that it can run on
/// the global graph, on a node's local table, or behind an access log.
pub trait LocalDistances {
    /// Length of `(a, b)` if it is an edge.
    fn length(&self, a: usize, b: usize) -> Option<f64>;

    /// Vertices adjacent to both `i` and `j`, ascending.
    fn common_neighbors(&self, i: usize, j: usize) -> Vec<usize>;

    /// Communication range `r` the distances were collected with.
    fn range(&self) -> f64;

    /// Relative degeneracy margin.
    fn epsilon(&self) -> f64 {
        DEFAULT_EPSILON
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistanceGraph {
    range: f64,
    epsilon: f64,
    adjacency: Vec<BTreeMap<usize, f64>>,
}

impl DistanceGraph {
    fn empty(n: usize, range: f64, epsilon: f64) -> Result<Self, GraphError> {
        if !(range > 0.0 && range.is_finite()) {
            return Err(GraphError::InvalidRange(range));
        }
        Ok(DistanceGraph { range, epsilon, adjacency: vec![BTreeMap::new(); n] })
    }

    /// Unit-disk graph of `ps` with range `r`; pairs at distance exactly
    /// `r` are included.
    pub fn build(ps: &PointSet, r: f64) -> Result<Self, GraphError> {
        let mut g = Self::empty(ps.len(), r, ps.epsilon())?;
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                let d = ps.dist(i, j);
                if d <= r {
                    g.adjacency[i].insert(j, d);
                    g.adjacency[j].insert(i, d);
                }
            }
        }
        Ok(g)
    }

    /// Ingests `(i, j, dist)` records. Duplicates (in either orientation)
    /// are merged when their distances agree within `epsilon * r`.
    pub fn load(
        records: impl IntoIterator<Item = (usize, usize, f64)>,
        n: usize,
        r: f64,
        epsilon: f64,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n, r, epsilon)?;
        for (i, j, dist) in records {
            for index in [i, j] {
                if index >= n {
                    return Err(GraphError::VertexOutOfBounds { index, n });
                }
            }
            if i == j {
                return Err(GraphError::SelfEdge(i));
            }
            if !(dist > 0.0 && dist <= r) {
                return Err(GraphError::OutOfRange { i, j, dist, range: r });
            }
            if let Some(&first) = g.adjacency[i].get(&j) {
                if (first - dist).abs() > epsilon * r {
                    return Err(GraphError::InconsistentDuplicate { i, j, first, second: dist });
                }
                continue;
            }
            g.adjacency[i].insert(j, dist);
            g.adjacency[j].insert(i, dist);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.adjacency[v].iter().map(|(&u, &d)| (u, d))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.get(a).is_some_and(|adj| adj.contains_key(&b))
    }

    /// Edges in ascending order with their lengths.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, f64)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, adj)| adj.range(i + 1..).map(move |(&j, &d)| (Edge::new(i, j), d)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    /// Neighbors common to both endpoints of the edge `(i, j)`, ascending.
    pub fn common_neighbors_of_edge(&self, i: usize, j: usize) -> Result<Vec<usize>, GraphError> {
        if !self.is_edge(i, j) {
            return Err(GraphError::NotAnEdge(i, j));
        }
        Ok(LocalDistances::common_neighbors(self, i, j))
    }

    /// Subgraph keeping edges of length at most `q`, with range `q`.
    pub fn restrict(&self, q: f64) -> Result<DistanceGraph, GraphError> {
        let mut g = Self::empty(self.n(), q, self.epsilon)?;
        for (i, adj) in self.adjacency.iter().enumerate() {
            g.adjacency[i] = adj.iter().filter(|(_, &d)| d <= q).map(|(&j, &d)| (j, d)).collect();
        }
        Ok(g)
    }

    /// Connected component label for each vertex, labels ascending by
    /// smallest member.
    pub fn components(&self) -> Vec<usize> {
        const UNSET: usize = usize::MAX;
        let mut label = vec![UNSET; self.n()];
        let mut next = 0;
        for start in 0..self.n() {
            if label[start] != UNSET {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(v) = stack.pop() {
                for &u in self.adjacency[v].keys() {
                    if label[u] == UNSET {
                        label[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&m| m + 1)
    }
}

impl LocalDistances for DistanceGraph {
    fn length(&self, a: usize, b: usize) -> Option<f64> {
        self.adjacency.get(a)?.get(&b).copied()
    }

    fn common_neighbors(&self, i: usize, j: usize) -> Vec<usize> {
        let (small, large) = if self.degree(i) <= self.degree(j) { (i, j) } else { (j, i) };
        self.adjacency[small]
            .keys()
            .copied()
            .filter(|&k| k != large && self.adjacency[large].contains_key(&k))
            .collect()
    }

    fn range(&self) -> f64 {
        self.range
    }

    fn epsilon(&self) -> f64 {
        self.epsilon
    }
}
