use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not an odd prime below 2^31")]
    BadPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(u32, u32),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("matrix of size {0} has the wrong parity for this operation")]
    SizeParity(usize),
    #[error("matrix is not alternating: {0}")]
    NotAlternating(String),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),
    #[error("quotient is not Artinian up to degree {0}")]
    NotArtinian(u32),
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("constant term present: {0}")]
    ConstantTerm(String),
    #[error("map never becomes surjective up to degree {0}")]
    NeverSurjective(u32),
    #[error("not a Koszul cycle: {0}")]
    NotACycle(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("json: {0}")]
    Json(String),
    #[error("unknown claim '{0}'")]
    UnknownClaim(String),
    #[error("csv: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
