use thiserror::Error;

use crate::report::VerificationReport;

/// Structural problems: malformed input or a construction whose
/// preconditions fail. A false identity on well-formed input is never an
/// `Error`; it is a failing [`VerificationReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),
    #[error("unknown basis name `{0}`")]
    UnknownBasisName(String),
    #[error("kind `{kind}` expects products {expected:?}, got {found:?}")]
    SlotMismatch {
        kind: String,
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("unknown structure kind `{0}`")]
    UnknownKind(String),
    #[error("{operation} is not defined for kind `{kind}`")]
    UnsupportedKind { operation: String, kind: String },
    #[error("no embedding from `{from}` into `{to}`")]
    UnsupportedEmbedding { from: String, to: String },
    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        report: Box<VerificationReport>,
    },
    #[error("non-canonical scalar `{0}`")]
    NonCanonicalScalar(String),
    #[error("bad expression `{expr}`: {reason}")]
    Expression { expr: String, reason: String },
    #[error("parameter `{0}` is not bound")]
    UnboundParameter(String),
    #[error("product `{slot}` is flagged {declared} but its entries are not")]
    SymmetryFlag { slot: String, declared: String },
    #[error("not homogeneous: {0}")]
    Homogeneity(String),
    #[error("bad filtration: {0}")]
    Filtration(String),
    #[error("quotient product is not well defined: {0}")]
    WellDefinedness(String),
    #[error("empty linear combination")]
    EmptyCombination,
    #[error("document error: {0}")]
    Document(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub fn doc(msg: impl Into<String>) -> Self {
        Error::Document(msg.into())
    }

    pub fn unsupported(operation: &str, kind: impl std::fmt::Display) -> Self {
        Error::UnsupportedKind {
            operation: operation.to_string(),
            kind: kind.to_string(),
        }
    }

    /// The verification report attached to a failed precondition.
    pub fn report(&self) -> Option<&VerificationReport> {
        match self {
            Error::Precondition { report, .. } => Some(report),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
