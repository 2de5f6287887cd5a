use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("configuration bound exceeded: {0}")]
    Bounds(String),

    #[error("ideal is not Artinian: {0}")]
    NonArtinian(String),

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("sequence has the wrong shape: {0}")]
    Shape(String),

    #[error("Hilbert function is not admissible: {0}")]
    Characterization(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("Hilbert function mismatch: expected {expected}, got {found}")]
    HilbertMismatch { expected: String, found: String },

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("variable x{index} is out of range for {nvars} variables")]
    VariableRange { index: usize, nvars: usize },

    #[error("invalid argument: {0}")]
    Argument(String),
}

impl Error {
    /// Stable, machine-readable error class used by the command line front end.
    pub fn class(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::Bounds(_) => "bounds",
            Error::NonArtinian(_) => "non-artinian",
            Error::UnitIdeal => "unit-ideal",
            Error::Shape(_) => "shape",
            Error::Characterization(_) => "characterization",
            Error::Hypothesis(_) => "hypothesis",
            Error::HilbertMismatch { .. } => "hilbert-mismatch",
            Error::Resource(_) => "resource",
            Error::Parse { .. } => "parse",
            Error::VariableRange { .. } => "variable-range",
            Error::Argument(_) => "argument",
        }
    }
}
