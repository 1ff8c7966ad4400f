use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("assignment has {got} bits, graph expects {expected}")]
    InvalidAssignment { expected: usize, got: usize },

    #[error("no edge with label {0}")]
    UnknownEdge(usize),

    #[error("vertex {0} out of range (graph has {1} vertices)")]
    UnknownVertex(usize, usize),

    #[error("problems live in different variable spaces ({left} vs {right})")]
    IncompatibleProblems { left: usize, right: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("enumeration of {needed} assignments exceeds cap {cap}")]
    EnumerationCapExceeded { needed: u128, cap: u128 },

    #[error("promise violated: {0}")]
    PromiseViolated(String),

    #[error("promise set is empty: {0}")]
    EmptyPromise(String),

    #[error("simulation dimension {dim} exceeds cap {cap}")]
    SimulationTooLarge { dim: usize, cap: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
