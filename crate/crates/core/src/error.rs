use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {p} is too small: need p > {bound}")]
    CharacteristicTooSmall { p: u64, bound: usize },

    #[error("the zero vector is not a projective point")]
    ZeroVector,

    #[error("wrong number of points: expected {expected}, found {found}")]
    PointCount { expected: String, found: usize },

    #[error("parameter points {0} and {1} coincide")]
    RepeatedParameter(usize, usize),

    #[error("points are not in general linear position: {0}")]
    NotGeneralPosition(String),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("operator degree {op} exceeds form degree {form}")]
    DegreeTooHigh { op: usize, form: usize },

    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("json: {0}")]
    Json(String),

    /// Sampled R-points failed general linear position. Only reachable if
    /// the GLP lemma for osculating simplices were false.
    #[error("sampled simplex vertices are not in general linear position (seed {seed:?}): {detail}")]
    DegenerateSample { seed: Option<u64>, detail: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
