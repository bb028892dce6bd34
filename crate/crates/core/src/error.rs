use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Why a graph carries no constant `Z_p`-tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoTowerReason {
    /// The underlying undirected graph is a forest, so the doubled graph has no cycles.
    Acyclic,
    /// Every cycle of the doubled graph has weight zero.
    ZeroWeightGcd,
}

impl fmt::Display for NoTowerReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoTowerReason::Acyclic => f.write_str("the underlying undirected graph is a forest (no cycles)"),
            NoTowerReason::ZeroWeightGcd => {
                f.write_str("every cycle has weight 0, so no cycle has weight coprime to p")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyGraph,
    NotConnected,
    VertexOutOfRange { edge: usize, vertex: usize, vertex_count: usize },
    LabelCountMismatch { labels: usize, vertex_count: usize },
    InvalidPrime(u64),
    NotAUnit { value: i64, p: u64 },
    NoTowerExists(NoTowerReason),
    NotSquare { rows: usize, cols: usize },
    DimensionMismatch,
    TooLarge { edges: usize, cap: usize },
    NonIntegralInterpolation,
    DegreeBoundExceeded { bound: usize },
    InternalDegreeViolation,
    ZeroPolynomial,
    StructureViolation(&'static str),
    InvalidSpec(&'static str),
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGraph => f.write_str("graph has no vertices"),
            Error::NotConnected => f.write_str("graph is not connected"),
            Error::VertexOutOfRange { edge, vertex, vertex_count } => write!(
                f,
                "edge {edge} references vertex {vertex}, but the graph has {vertex_count} vertices"
            ),
            Error::LabelCountMismatch { labels, vertex_count } => {
                write!(f, "{labels} labels given for {vertex_count} vertices")
            }
            Error::InvalidPrime(p) => write!(f, "{p} is not a prime"),
            Error::NotAUnit { value, p } => write!(f, "{value} is not a unit modulo {p}"),
            Error::NoTowerExists(reason) => write!(f, "no constant Z_p-tower exists: {reason}"),
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::DimensionMismatch => f.write_str("matrix dimensions do not match"),
            Error::TooLarge { edges, cap } => {
                write!(f, "graph has {edges} edges, brute force is capped at {cap}")
            }
            Error::NonIntegralInterpolation => {
                f.write_str("interpolated polynomial has non-integral coefficients (degree bound too small)")
            }
            Error::DegreeBoundExceeded { bound } => {
                write!(f, "determinant has degree above the bound {bound}")
            }
            Error::InternalDegreeViolation => {
                f.write_str("characteristic polynomial failed its degree or P(0) = 0 check")
            }
            Error::ZeroPolynomial => f.write_str("polynomial is zero"),
            Error::StructureViolation(what) => write!(f, "structure violation: {what}"),
            Error::InvalidSpec(what) => write!(f, "invalid specification: {what}"),
            Error::Overflow => f.write_str("integer overflow"),
        }
    }
}

impl core::error::Error for Error {}
