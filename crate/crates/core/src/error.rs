use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("algebra mismatch: elements belong to different quotient algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("quotient algebra is infinite dimensional (finite_dim check failed)")]
    NotZeroDimensional,
    #[error("(J:I) + I is not the unit ideal (comaximal check failed)")]
    NotComaximal,
    #[error("Bezoutian coefficient matrix is singular")]
    SingularBezoutian,
    #[error("det(Psi_T) = 0: u vanishes at a zero of H off V(I)")]
    DegenerateU,
    #[error("det(Psi) = 0 for the chosen u and functional")]
    DegeneratePhiPsi,
    #[error("no non-degenerate (u, phi) pair found after {retries} attempts")]
    GenericityFailure { retries: usize },
    #[error("signature(Phi_T) + signature(Psi_T) = {0} is odd")]
    NonIntegerResult(i64),
    #[error("signature(Phi_T) = {0} is odd for an even-dimensional immersion")]
    OddSignature(i64),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input violates a hypothesis of the degree formula.
    Assumption,
    /// No generic `u`/functional was found.
    Genericity,
    /// Malformed input.
    Input,
    /// Arithmetic contradiction; a bug or a violated upstream guarantee.
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::NotZeroDimensional | Error::NotComaximal => ErrorClass::Assumption,
            Error::DegenerateU | Error::DegeneratePhiPsi | Error::GenericityFailure { .. } => {
                ErrorClass::Genericity
            }
            Error::RingMismatch(_)
            | Error::AlgebraMismatch
            | Error::DimensionMismatch(_)
            | Error::Parse { .. }
            | Error::InvalidProblem(_) => ErrorClass::Input,
            Error::InexactDivision(_)
            | Error::SingularBezoutian
            | Error::NonIntegerResult(_)
            | Error::OddSignature(_)
            | Error::Internal(_) => ErrorClass::Internal,
        }
    }
}
