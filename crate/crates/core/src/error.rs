use thiserror::Error;

use crate::partition::EdgePartition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) appears more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    UnsupportedOrder(usize),
    #[error("order {n} exceeds the isomorphism cap of {cap}")]
    OrderTooLarge { n: usize, cap: usize },
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("edge set built for {found} edges used with a graph of {expected} edges")]
    MismatchedGraph { expected: usize, found: usize },
    #[error("{what} needs at most {cap} edges, graph has {m}")]
    SizeCapExceeded { what: &'static str, m: usize, cap: usize },
    #[error("edge set is not edge dominating")]
    NotDominating,
    #[error("edge sets overlap")]
    OverlappingSets,
    #[error("edge set is empty")]
    EmptySet,
    #[error("not a partition of the edge set: {0}")]
    NotAPartition(String),
    #[error("partition is not an ec-partition (class {0} has no coalition partner)")]
    NotAnEcPartition(usize),
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("graph has a full edge")]
    HasFullEdge,
    #[error("graph has an isolated vertex")]
    HasIsolatedVertex,
    #[error("construction did not yield an ec-partition: {0}")]
    ConstructionFailed(String),
    #[error("time budget exhausted; EC lies in [{lo}, {hi}]")]
    TimeBudgetExceeded {
        lo: usize,
        hi: usize,
        best: Box<EdgePartition>,
    },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed sweep record: {0}")]
    MalformedRecord(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e.to_string())
    }
}
