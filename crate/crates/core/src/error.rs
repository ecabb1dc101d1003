use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Dynkin diagram `{0}`")]
    InvalidDiagram(String),

    #[error("vertex {vertex} is not a vertex of {diagram}")]
    UnknownVertex { vertex: usize, diagram: String },

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("monomial {0} is not l-dominant")]
    NotDominant(String),

    #[error("monomial {lower} is not below {upper}")]
    NotComparable { lower: String, upper: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("factors span several orbits")]
    OrbitMismatch,

    #[error("factor steps are not nonincreasing")]
    Ordering,

    #[error("orbit {0} appears more than once")]
    DuplicateOrbit(u32),

    #[error("monomial table exceeded the limit of {limit} entries")]
    LimitExceeded { limit: usize },

    /// The expansion or the bar recursion produced data that violates a
    /// structural identity. This is never caused by malformed user input.
    #[error("inconsistency: {0}")]
    Inconsistent(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error reports an internal consistency failure rather than
    /// bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Inconsistent(_) | Error::LimitExceeded { .. } | Error::Cache(_) | Error::Io(_)
        )
    }
}
