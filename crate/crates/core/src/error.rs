use thiserror::Error;

/// A single violated density-matrix invariant, with the measured magnitude.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Largest |a_ij - conj(a_ji)|.
    NotHermitian { max_asymmetry: f64 },
    /// Measured trace (real and imaginary parts).
    Trace { re: f64, im: f64 },
    /// Smallest eigenvalue of the Hermitian part.
    NegativeEigenvalue { min_eigenvalue: f64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotHermitian { max_asymmetry } => {
                write!(f, "not Hermitian (max asymmetry {max_asymmetry:e})")
            }
            Violation::Trace { re, im } => write!(f, "trace is {re}{im:+}i, expected 1"),
            Violation::NegativeEigenvalue { min_eigenvalue } => {
                write!(f, "negative eigenvalue {min_eigenvalue}")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },

    #[error("matrix of dimension {dim} needs {expected} entries, got {got}")]
    EntryCount { dim: usize, expected: usize, got: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian (max asymmetry {max_asymmetry:e})")]
    NotHermitian { max_asymmetry: f64 },

    #[error("invalid density matrix: {}", join(.0))]
    InvalidDensity(Vec<Violation>),

    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorIndex { index: usize, max: usize },

    #[error("phase-space point ({mu}, {nu}) out of range for dimension {dim}")]
    PointOutOfRange { mu: i64, nu: i64, dim: usize },

    #[error("Wigner grid has imaginary residue {0:e}")]
    ImaginaryResidue(f64),

    #[error("parameter {name} = {value} outside {range}")]
    OutOfRange { name: &'static str, value: f64, range: &'static str },

    #[error("polarization length {0} exceeds 1")]
    Polarization(f64),

    #[error("invalid selector {0}, expected 1 or 2")]
    Selector(u8),

    #[error("negative population {name} = {value}")]
    NegativePopulation { name: &'static str, value: f64 },

    #[error("populations sum to {0}, expected 1")]
    PopulationSum(f64),

    #[error("unsupported pulse {0}, expected 2 or 6")]
    Pulse(u8),

    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("element ({row}, {col}) = {magnitude:e} lies outside the X pattern")]
    NotXState { row: usize, col: usize, magnitude: f64 },

    #[error("unknown representation {0:?}, expected pair or su4")]
    UnknownRepresentation(String),

    #[error("unknown state {0:?}")]
    UnknownState(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown format {0:?}, expected csv, json or gnuplot")]
    Format(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
