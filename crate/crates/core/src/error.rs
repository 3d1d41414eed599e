//! Error types for every stage of the pipeline.

use thiserror::Error;

use crate::complex::{Edge, Triangle};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("non-finite coordinate at point {index}")]
    NonFinite { index: usize },
    #[error("points {0} and {1} coincide within the degeneracy margin")]
    CoincidentPoints(usize, usize),
    #[error("side lengths must be positive (got a = {a}, b = {b})")]
    NonPositiveSide { a: f64, b: f64 },
    #[error("sides ({a}, {b}, {c}) violate the triangle inequality")]
    TriangleInequalityViolation { a: f64, b: f64, c: f64 },
    #[error("chord {chord} is longer than the diameter {diameter}")]
    ChordTooLong { chord: f64, diameter: f64 },
    #[error("chord length must be positive (got {0})")]
    NonPositiveChord(f64),
    #[error("points are collinear within the degeneracy margin")]
    CollinearPoints,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("points {0:?} are cocircular within the degeneracy margin")]
    CocircularDegeneracy([usize; 4]),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("range must be positive and finite (got {0})")]
    InvalidRange(f64),
    #[error("vertex {index} out of bounds for a graph with {n} vertices")]
    VertexOutOfBounds { index: usize, n: usize },
    #[error("self edge on vertex {0}")]
    SelfEdge(usize),
    #[error("distance {dist} for ({i}, {j}) lies outside (0, {range}]")]
    OutOfRange { i: usize, j: usize, dist: f64, range: f64 },
    #[error("pair ({i}, {j}) recorded with distances {first} and {second}")]
    InconsistentDuplicate { i: usize, j: usize, first: f64, second: f64 },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LocalError {
    #[error("parameter q = {q} exceeds the graph range {range}")]
    ParameterTooLarge { q: f64, range: f64 },
    #[error("parameter q must be positive (got {0})")]
    NonPositiveParameter(f64),
    #[error("edge ({i}, {j}) has length {length} > q = {q}")]
    EdgeLongerThanParameter { i: usize, j: usize, length: f64, q: f64 },
    #[error("ambiguous side test for edge ({i}, {j}) between nodes {reference} and {other}")]
    AmbiguousSideTest { i: usize, j: usize, reference: usize, other: usize },
    #[error("local table of node {node} cannot answer distance ({a}, {b})")]
    NonLocalQuery { node: usize, a: usize, b: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("edge {edge}: {source}")]
    AtEdge {
        edge: Edge,
        #[source]
        source: Box<LocalError>,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CollapseError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("pairing violated at edge {edge}: {reason}")]
    PairingViolation { edge: Edge, reason: String },
    #[error("triangle {0} of the surplus set is not paired with any edge")]
    UnpairedTriangle(Triangle),
    #[error("collapse stuck with {} unprocessed pairs: {remaining:?}", remaining.len())]
    StuckCollapse { remaining: Vec<(Edge, Triangle)> },
    #[error("collapse ended on a complex different from the alpha complex")]
    EndMismatch,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl FormatError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        FormatError::Parse { line, message: message.into() }
    }
}
