use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pattern has {size} vertices, above the cap of {cap}")]
    PatternTooLarge { size: usize, cap: usize },
}

/// The input contained a structure its caller promised was absent.
///
/// `embedding` maps pattern vertices to host vertices when one was recovered.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("precondition violated: input contains induced {pattern}{}", fmt_embedding(.embedding))]
pub struct Violation {
    pub pattern: String,
    pub embedding: Option<Vec<usize>>,
}

fn fmt_embedding(e: &Option<Vec<usize>>) -> String {
    match e {
        Some(vs) => format!(" at {vs:?}"),
        None => String::new(),
    }
}

impl Violation {
    pub fn new(pattern: impl Into<String>, embedding: Option<Vec<usize>>) -> Self {
        Violation {
            pattern: pattern.into(),
            embedding,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported pattern class: {0}")]
    Unsupported(String),
    #[error("extraction produced {got} vertices, below the guaranteed {wanted}")]
    Shortfall { got: usize, wanted: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
