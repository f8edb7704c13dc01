use thiserror::Error;

/// Largest vertex count supported; labelings are stored as `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// Largest edge count for which orientations can be enumerated as integers.
pub const MAX_ENUMERABLE_EDGES: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc {0} > {1}")]
    DuplicateArc(usize, usize),
    #[error("digon between {0} and {1}")]
    Digon(usize, usize),
    #[error("endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("{0} edges exceeds the enumerable maximum of {MAX_ENUMERABLE_EDGES}")]
    TooManyEdges(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("graph `{0}` requires a vertex count")]
    MissingCount(String),
    #[error("invalid vertex count {n} for `{name}`: {reason}")]
    InvalidCount {
        name: String,
        n: usize,
        reason: &'static str,
    },
    #[error("digraph is not an oriented path in vertex order")]
    NotAPath,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("n = {n} outside supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error("ragged table: row {row} has {len} entries, expected {order}")]
    RaggedTable {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("table entry {entry} out of range for order {order}")]
    EntryOutOfRange { entry: usize, order: usize },
    #[error("label subset must be nonempty")]
    EmptySubset,
    #[error("label subset element {element} not in quasigroup of order {order}")]
    SubsetOutOfRange { element: usize, order: usize },
    #[error("table is not commutative; edge labels are undefined on undirected graphs")]
    NonCommutative,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
