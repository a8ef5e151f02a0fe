use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared variable `{name}` at line {line}, column {column}")]
    UndeclaredVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("generator {index} is the zero polynomial")]
    ZeroGenerator { index: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("the unit ideal has no log-canonical threshold")]
    UnitIdeal,
    #[error("input is not a monomial ideal; this invariant is only computed for monomial ideals")]
    NotMonomial,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("koszul cutoff {cutoff} is below the required minimum {minimum}")]
    CutoffTooSmall { cutoff: u32, minimum: u32 },
    #[error("saturation did not stabilize within {0} rounds")]
    SaturationDiverged(usize),
    #[error("linear program dimensions are inconsistent: {0}")]
    LpDimension(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("exact division failed: divisor does not divide dividend")]
    InexactDivision,
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
