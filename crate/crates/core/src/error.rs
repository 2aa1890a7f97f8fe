use thiserror::Error;

/// Coarse error classes; the CLI maps each to its own exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Bound,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("unipotent generator {generator} is not nilpotent")]
    NotNilpotent { generator: usize },
    #[error("unipotent generator {generator} has adjoint grading weight {weight}, which must be > 0")]
    NonPositiveGradingWeight { generator: usize, weight: i64 },
    #[error("unipotent generator {generator} violates [D, N] = w·N for the grading D = diag(gm_weights)")]
    GradingCommutationFailure { generator: usize },
    #[error("subset enumeration needs {count} coordinates but the cap is {cap}")]
    EnumerationBoundExceeded { count: usize, cap: usize },
    #[error("unknown stratum index {0}")]
    UnknownIndex(String),
    #[error("grading action is trivial: only one distinct weight")]
    TrivialAction,
    #[error("twist {chi} is not adapted: need {lo} < chi < {hi}")]
    NotAdapted { chi: String, lo: String, hi: String },
    #[error("exact path supports at most one unipotent generator, got {dim}")]
    UnsupportedUnipotentDimension { dim: usize },
    #[error("m = {m} is below the required lower bound m0 = {m0}")]
    MTooSmall { m: u64, m0: u64 },
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBoundExceeded { degree: u32, bound: u32 },
    #[error("binary form is identically zero")]
    ZeroForm,
    #[error("action has no grading data")]
    MissingGrading,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::MalformedDocument(_)
            | Error::NotNilpotent { .. }
            | Error::NonPositiveGradingWeight { .. }
            | Error::GradingCommutationFailure { .. } => ErrorKind::Parse,
            Error::EnumerationBoundExceeded { .. } | Error::DegreeBoundExceeded { .. } => ErrorKind::Bound,
            _ => ErrorKind::Precondition,
        }
    }
}
