use thiserror::Error;

use crate::digraph::Vertex;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("digon between vertices {0} and {1}")]
    Digon(Vertex, Vertex),

    #[error("vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("clause on line {line} has {len} literals (at most 3 allowed)")]
    ClauseTooLarge { line: usize, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("set {set} is not independent: arc {tail} -> {head}")]
    NotIndependent { set: usize, tail: Vertex, head: Vertex },

    #[error("vertex {0} is not colored")]
    UncoloredVertex(Vertex),

    #[error("vertex {vertex} has color {color} outside 1..={k}")]
    ColorOutOfRange { vertex: Vertex, color: usize, k: usize },

    #[error("size cap exceeded: {required} vertices needed, cap is {cap}")]
    SizeCapExceeded { required: u128, cap: usize },

    #[error("budget exceeded: {required} work units needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("too many variables for brute force: {0} (at most 25)")]
    TooManyVariables(usize),

    #[error("assignment does not satisfy clause {0}")]
    NotSatisfying(usize),

    #[error("not a long cycle: {0}")]
    NotALongCycle(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for the cap and budget failures of super-exponential searches.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::SizeCapExceeded { .. } | Error::BudgetExceeded { .. })
    }
}
