use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point {0} is a branch point (0 or 1)")]
    BranchPoint(String),

    #[error("side tag `{side}` is inconsistent with z = {z}")]
    InconsistentSide { z: String, side: &'static str },

    #[error("non-finite coordinate in {0}")]
    NonFinite(String),

    #[error("five-tuple is not in FT⁺: {0}")]
    NotInFtPlus(String),

    #[error("five-tuple is not a flattened five-term relation")]
    NotFlattenedFt,

    #[error("argument must be nonzero")]
    ZeroArgument,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("index precondition violated: {0}")]
    IndexPrecondition(String),

    #[error("requires Im z > 0, got Im z = {0}")]
    NotUpperHalfPlane(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("simplex {index} (line {line}): {message}")]
    Validation {
        index: usize,
        line: usize,
        message: String,
    },

    #[error("input contains no simplices")]
    EmptyInput,

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
