use thiserror::Error;

/// Errors produced by the algebra, automaton and enumeration layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),
    #[error("operands live over different fields (F_{left} vs F_{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("polynomial is reducible")]
    Reducible,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("invalid rule: {0}")]
    InvalidRule(String),
    #[error("rule is not bipermutive")]
    NotBipermutive,
    #[error("rules do not form an orthogonal pair")]
    NotOrthogonal,
    #[error("operation requires the binary alphabet, got q = {0}")]
    BinaryOnly(u32),
    #[error("unsupported diameter {d}: {reason}")]
    UnsupportedDiameter { d: usize, reason: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Whether the error stems from I/O rather than from the inputs' mathematics.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io(_) | Error::Csv(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
