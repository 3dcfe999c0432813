use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("graph contains a directed cycle through vertices {0:?}")]
    CyclicGraph(Vec<usize>),

    #[error("vertex {vertex} out of range 1..={n}")]
    BadVertex { vertex: usize, n: usize },

    #[error("bad state: {0}")]
    BadState(String),

    #[error("{0} is not an order-preserving state")]
    NotAState(String),

    #[error("{0} is not an order ideal")]
    NotAnIdeal(String),

    #[error("relation is not a partial order: {0}")]
    NotAPoset(String),

    #[error("enumeration of {size} innovation vectors exceeds the limit {limit}")]
    TooLarge { size: u128, limit: u128 },

    #[error("support mismatch: {0}")]
    SupportMismatch(String),

    #[error("alpha row {row} is not nondecreasing with last entry 1")]
    NotMonotone { row: usize },

    #[error("division by zero: alpha^({vertex})_{index} = 0")]
    DivideByZero { vertex: usize, index: usize },

    #[error("variable {0} has no image under the map")]
    UnmappedVariable(String),

    #[error("variable {0} is unbound")]
    UnboundVariable(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable variant name for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::CyclicGraph(_) => "CyclicGraph",
            Error::BadVertex { .. } => "BadVertex",
            Error::BadState(_) => "BadState",
            Error::NotAState(_) => "NotAState",
            Error::NotAnIdeal(_) => "NotAnIdeal",
            Error::NotAPoset(_) => "NotAPoset",
            Error::TooLarge { .. } => "TooLarge",
            Error::SupportMismatch(_) => "SupportMismatch",
            Error::NotMonotone { .. } => "NotMonotone",
            Error::DivideByZero { .. } => "DivideByZero",
            Error::UnmappedVariable(_) => "UnmappedVariable",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::InvalidParams(_) => "InvalidParams",
            Error::Usage(_) => "Usage",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
