//! Error type shared by all modules, with process exit codes for the CLI.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in a polynomial string; positions are 1-based.
    Parse { line: usize, col: usize, msg: String },
    /// Invalid problem data: wrong counts, inhomogeneous forms, degree mismatch.
    Input(String),
    /// Exact division requested but the remainder is nonzero.
    NonDivisible,
    DivisionByZero,
    /// No nonzero minor of the requested size exists (generic rank < size).
    RankDeficient { need: usize, have: usize },
    /// A graded piece fails an acyclicity precondition (Euler characteristic,
    /// stage-1 surjectivity, decomposition inconsistency).
    NonAcyclic(String),
    /// Invariant violation that indicates a bug, not bad input.
    Internal(String),
}

impl Error {
    /// CLI exit code: 2 input, 3 non-acyclic/degenerate, 4 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Input(_) => 2,
            Error::RankDeficient { .. } | Error::NonAcyclic(_) => 3,
            Error::NonDivisible | Error::DivisionByZero | Error::Internal(_) => 4,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at {}:{}: {}", line, col, msg)
            }
            Error::Input(msg) => write!(f, "invalid input: {}", msg),
            Error::NonDivisible => write!(f, "exact division failed: nonzero remainder"),
            Error::DivisionByZero => write!(f, "division by zero polynomial"),
            Error::RankDeficient { need, have } => write!(
                f,
                "no nonzero minor of size {} (generic rank {}); \
                 the graded piece may not be acyclic at this degree — try raising mu",
                need, have
            ),
            Error::NonAcyclic(msg) => write!(f, "complex not acyclic: {}", msg),
            Error::Internal(msg) => write!(f, "internal inconsistency: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
