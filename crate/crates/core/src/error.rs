use thiserror::Error;

/// Errors raised by graph construction, ideal arithmetic and the invariant pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("the zero ideal has no Betti data of interest")]
    ZeroIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("the void complex has no reduced homology")]
    VoidComplex,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent overflow")]
    Overflow,
    #[error("cost gate: {what} estimated at {estimate} units, limit {limit}")]
    CostExceeded {
        what: String,
        estimate: u64,
        limit: u64,
    },
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
