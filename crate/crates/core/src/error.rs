use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("edge {{{0}, {1}}} is a loop or a duplicate")]
    NotSimple(usize, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {edge} out of range for {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NoSuchEdge(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("edge set is not in the bond space")]
    NotInBond,
    #[error("input too large for exhaustive search: {what} = {value} exceeds {limit}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("operation requires at least 3 vertices, graph has {n}")]
    DegreeTooSmall { n: usize },
    #[error("image of the vertex cut E({vertex}) is not a vertex cut")]
    NotAVertexCutImage { vertex: usize },
    #[error("endpoints of a transposition must differ")]
    SameVertex,
    #[error("exploration cap of {cap} elements exceeded")]
    CapExceeded { cap: usize },
    #[error("invalid orbit descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("invalid one-hub graph parameters: {0}")]
    InvalidSpec(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyVertexSet => "EmptyVertexSet",
            Error::NotSimple(..) => "NotSimple",
            Error::NotConnected => "NotConnected",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::EdgeOutOfRange { .. } => "EdgeOutOfRange",
            Error::NoSuchEdge(..) => "NoSuchEdge",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotInBond => "NotInBond",
            Error::SizeLimit { .. } => "SizeLimit",
            Error::DegreeTooSmall { .. } => "DegreeTooSmall",
            Error::NotAVertexCutImage { .. } => "NotAVertexCutImage",
            Error::SameVertex => "SameVertex",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::InvalidDescriptor(_) => "InvalidDescriptor",
            Error::InvalidTree(_) => "InvalidTree",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Parse(_) => "Parse",
        }
    }
}
