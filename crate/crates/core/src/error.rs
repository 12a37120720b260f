use std::fmt;

use thiserror::Error;

/// A single broken invariant found while validating action data or parsing a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Path to the offending field, e.g. `isolated[2].exponents[0]`.
    pub path: String,
    pub message: String,
}

impl Violation {
    pub fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Violation {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("unknown value: {0}")]
    UnknownValue(String),

    #[error("unsupported data: {0}")]
    UnsupportedData(String),

    /// A surgery was requested on points that do not meet its hypotheses.
    #[error("hypothesis violated ({anchor}): {message}")]
    Hypothesis {
        anchor: &'static str,
        message: String,
    },

    #[error("unsupported degeneracy: {0}")]
    UnsupportedDegeneracy(String),

    #[error("data not realizable by a circle action ({anchor} violated): {message}")]
    NotRealizable {
        anchor: &'static str,
        message: String,
    },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("validation failed: {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("unknown manifold name: {0}")]
    Lookup(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
