//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All domain and plumbing errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate interpolation node: {0}")]
    DuplicateNode(String),
    #[error("singular linear system (rank defect {rank_defect})")]
    SingularSystem { rank_defect: usize, detail: String },
    #[error("exact factorization unavailable: {0}")]
    FactorizationUnavailable(String),
    #[error("pole at h=0 in limit: {0}")]
    PoleAtLimit(String),
    #[error("quadratic-extension element has a nonzero odd part: {0}")]
    OddPart(String),
    #[error("spectral data is non-generic: {0}")]
    NonGeneric(String),
    #[error("no pivot available: {0}")]
    NoPivot(String),
    #[error("apparent abscissa collides with a pole: {0}")]
    PoleCollision(String),
    #[error("blow-up data required but missing: {0}")]
    MissingBlowup(String),
    #[error("indeterminate value (0/0 without deformation context): {0}")]
    Indeterminate(String),
    #[error("jump parameters outside the admissible locus: {0}")]
    ParamOutsideX(String),
    #[error("splitting type exceeds the admissible bound: {0}")]
    BundleBoundExceeded(String),
    #[error("residue is not semisimple where a direction is needed: {0}")]
    NonSemisimple(String),
    #[error("degenerate eigenvalue solve at pole index {index}")]
    DegenerateEigenSolve { index: usize },
    #[error("degenerate quadratic: {0}")]
    DegenerateQuadratic(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("usage error: {0}")]
    UsageError(String),
    #[error("parse error at {location}: {detail}")]
    ParseError { location: String, detail: String },
}

impl Error {
    /// Stable machine-readable diagnostic name for the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicateNode(_) => "DuplicateNode",
            Error::SingularSystem { .. } => "SingularSystem",
            Error::FactorizationUnavailable(_) => "FactorizationUnavailable",
            Error::PoleAtLimit(_) => "PoleAtLimit",
            Error::OddPart(_) => "OddPart",
            Error::NonGeneric(_) => "NonGeneric",
            Error::NoPivot(_) => "NoPivot",
            Error::PoleCollision(_) => "PoleCollision",
            Error::MissingBlowup(_) => "MissingBlowup",
            Error::Indeterminate(_) => "Indeterminate",
            Error::ParamOutsideX(_) => "ParamOutsideX",
            Error::BundleBoundExceeded(_) => "BundleBoundExceeded",
            Error::NonSemisimple(_) => "NonSemisimple",
            Error::DegenerateEigenSolve { .. } => "DegenerateEigenSolve",
            Error::DegenerateQuadratic(_) => "DegenerateQuadratic",
            Error::DivisionByZero(_) => "DivisionByZero",
            Error::Domain(_) => "Domain",
            Error::UsageError(_) => "UsageError",
            Error::ParseError { .. } => "ParseError",
        }
    }

    /// CLI exit code category: 2 usage, 3 domain, 4 parse.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UsageError(_) => 2,
            Error::ParseError { .. } => 4,
            _ => 3,
        }
    }
}
