use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rotation pair ({cos}, {sin}) is not a unit vector")]
    NonUnitRotation { cos: String, sin: String },

    /// Two edges touch without properly crossing, or overlap.
    #[error("degenerate incidence between edges {0} and {1}: {2}")]
    Degenerate(usize, usize, String),

    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("construction {name} failed: {message}")]
    Construction { name: String, message: String },

    #[error("conflict graph too large for exact mode ({size} > {limit}); use greedy mode")]
    TooLarge { size: usize, limit: usize },

    /// A certificate the theory guarantees did not hold.
    #[error("inconsistency: {0}")]
    Inconsistency(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
