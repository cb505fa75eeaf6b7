use thiserror::Error;

/// Errors produced by the graph, ideal and homological routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    InvalidVertex { index: usize, n: usize },
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("loop on vertex `{0}` (graphs are simple)")]
    SelfLoop(String),
    #[error("enumeration exceeded the cap of {0} sets")]
    TooManySets(usize),
    #[error("{what} too large: {size} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid clique partition: {0}")]
    InvalidPartition(String),
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("exponent vector has length {got}, ring has {expected} variables")]
    Arity { got: usize, expected: usize },
    #[error("exponent {0} exceeds the supported maximum")]
    ExponentOverflow(u32),
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
