use thiserror::Error;

use crate::scalar::Field;

/// Failures of the exact linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("unrecognized field descriptor `{0}`")]
    BadField(String),
    #[error("unparseable scalar `{0}`")]
    BadScalar(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("map is not invertible (rank {rank}, shape {rows}x{cols})")]
    NotInvertible { rank: usize, rows: usize, cols: usize },
}

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error("no antipode present")]
    MissingAntipode,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("not a groupoid: morphism `{morphism}` {reason}")]
    NotGroupoid { morphism: String, reason: String },
    #[error("graded axiom `{axiom}` fails at ({sigma}, {tau})")]
    GradedAxiom { axiom: String, sigma: String, tau: String },
    #[error("antipode recovery blocked: can^{z}_{{{x},{y}}} has rank {rank} < {expected}")]
    RecoveryFailed {
        z: String,
        x: String,
        y: String,
        rank: usize,
        expected: usize,
    },
    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected a `{expected}` file, found `{found}`")]
    KindMismatch { expected: String, found: String },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
