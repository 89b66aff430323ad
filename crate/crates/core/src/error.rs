use thiserror::Error;

use crate::rings::Elem;

/// Errors raised by the algebraic operations and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different algebras: {0}")]
    MixedAlgebras(String),

    #[error("unsupported capability: {0}")]
    UnsupportedCapability(String),

    #[error("annihilator of {0} is not generated by an idempotent")]
    NotWeakBaerAt(Elem),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("target mismatch: {0}")]
    TargetMismatch(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("{0} does not generate a prime ideal")]
    NotPrime(Elem),

    #[error("ring is not an integral domain")]
    NotADomain,

    #[error("ring carries no total order")]
    UnorderedRing,

    #[error("backend failed validation: {0}")]
    InconsistentBackend(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
}

impl Error {
    /// Stable machine-readable code, used by the CLI error object.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MixedAlgebras(_) => "MixedAlgebras",
            Error::UnsupportedCapability(_) => "UnsupportedCapability",
            Error::NotWeakBaerAt(_) => "NotWeakBaerAt",
            Error::NotIdempotent => "NotIdempotent",
            Error::TargetMismatch(_) => "TargetMismatch",
            Error::RingMismatch(_) => "RingMismatch",
            Error::NotPrime(_) => "NotPrime",
            Error::NotADomain => "NotADomain",
            Error::UnorderedRing => "UnorderedRing",
            Error::InconsistentBackend(_) => "InconsistentBackend",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Parse { .. } => "ParseError",
        }
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
