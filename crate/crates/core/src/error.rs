use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by failure class: input-domain errors (caller passed
/// something outside an operation's contract), structural errors (an object
/// violates an invariant the operation needs, e.g. disconnected or irregular
/// components), resource exhaustion (bounded searches that gave up), and
/// truncation-insufficiency (a verdict was requested that the finite data
/// cannot support).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid point: component {component}, vertex {vertex} is out of range")]
    InvalidPoint { component: usize, vertex: usize },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("component {component} is not connected")]
    Disconnected { component: usize },

    #[error("component {component} is not regular (vertex degrees differ)")]
    Irregular { component: usize },

    #[error("component {component} has a zero-degree Laplacian (no edges)")]
    Degenerate { component: usize },

    #[error("component {component}: Laplacian kernel has dimension {dim}, expected 1 (disconnected block?)")]
    KernelDimension { component: usize, dim: usize },

    #[error("sequence not strictly increasing at position {index}")]
    NotStrictlyIncreasing { index: usize },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("{value} is not an odd prime")]
    NotPrime { value: u64 },

    #[error("degree {degree} and size {size} have odd product (handshake parity)")]
    OddHandshake { degree: usize, size: usize },

    #[error("component {index}: no admissible graph found within {retries} sampling attempts")]
    RetriesExhausted { index: usize, retries: usize },

    #[error("word is not reduced at position {position}")]
    NotReduced { position: usize },

    #[error("degree bound violated: max degree {max_degree} exceeds 2k = {bound}")]
    DegreeBound { max_degree: usize, bound: usize },

    #[error("labelling is ambiguous at component {component}, vertex {vertex}, generator a{generator}: more than one {direction} edge")]
    AmbiguousLabel {
        component: usize,
        vertex: usize,
        generator: usize,
        direction: &'static str,
    },

    #[error("theta has a fixed point at component {component}, vertex {vertex}")]
    FixedPointPresent { component: usize, vertex: usize },

    #[error("truncation insufficient: {components} components available, horizon requires {horizon}")]
    TruncationInsufficient { components: usize, horizon: usize },

    #[error("maximal-word search found {found} candidates (expected exactly one)")]
    MaximalWordSearch { found: usize },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
