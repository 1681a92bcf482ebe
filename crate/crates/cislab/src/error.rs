//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide error enum. Variants are grouped by the subsystem that raises them.
#[derive(Debug, Error)]
pub enum Error {
    // --- transversal-set validation ---
    #[error("interval [{lo}, {hi}) is empty or reversed")]
    EmptyInterval { lo: String, hi: String },
    #[error("pieces overlap modulo 1 on [{lo}, {hi})")]
    Overlap { lo: String, hi: String },
    #[error("pieces leave a gap modulo 1 on [{lo}, {hi})")]
    Gap { lo: String, hi: String },
    #[error("total length is {total}, expected 1")]
    Length { total: String },
    #[error("piece [{lo}, {hi}) does not map onto a single interval modulo 1")]
    NonContiguousImage { lo: String, hi: String },

    // --- shift parameters ---
    #[error("shift {alpha} lies in the excluded set (the symbol curve passes through the origin)")]
    ExcludedAlpha { alpha: String },
    #[error("direction term is undefined: consecutive base translations coincide at piece {k}")]
    UndefinedDirection { k: usize },

    // --- symbol curves ---
    #[error("segment passes through the origin ((N-M)*alpha is half an odd integer)")]
    OriginCrossing,
    #[error("winding sum {value} is more than 1e-6 away from an integer")]
    NonIntegerIndex { value: f64 },
    #[error("sampled curve comes within {min_modulus:e} of the origin")]
    OriginProximity { min_modulus: f64 },
    #[error("argument increment {increment} >= pi; increase samples per piece")]
    Undersampled { increment: f64 },

    // --- splines and polynomials ---
    #[error("exponential spline base t must be nonzero")]
    ZeroBase,
    #[error("cannot split zeros of the zero polynomial")]
    Degenerate,

    // --- Lerch sums ---
    #[error("series hits a pole: b = {b} makes n + b vanish")]
    Pole { b: String },
    #[error("x = {x} is an integer pole of the doubly infinite sum")]
    IntegerPole { x: f64 },

    // --- interpolant and spline classification ---
    #[error("symbol modulus drops to {min_modulus:e} on the grid; coefficients are unreliable")]
    NearSingularSymbol { min_modulus: f64 },
    #[error("x = {x} is outside the truncation-safe window |x| <= {window}")]
    Window { x: f64, window: f64 },
    #[error("exponent {value} is not within 1e-9 of the expected integer {expected}")]
    NonIntegerExponent { value: f64, expected: i64 },
    #[error("fractional part of alpha is 1/2: the symbol vanishes and the index is undefined")]
    HalfIntegerAlpha,

    // --- batch front-end ---
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON in {path} at line {line}, column {column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
}

/// Coarse classification used by the command-line front-end for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input: malformed files, invalid arguments, rejected sets.
    Validation,
    /// A numerical diagnostic tripped during an otherwise valid computation.
    Numerical,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::EmptyInterval { .. }
            | Error::Overlap { .. }
            | Error::Gap { .. }
            | Error::Length { .. }
            | Error::NonContiguousImage { .. }
            | Error::ExcludedAlpha { .. }
            | Error::InvalidArgument(_)
            | Error::Io { .. }
            | Error::ZeroBase
            | Error::Pole { .. }
            | Error::IntegerPole { .. }
            | Error::Window { .. }
            | Error::Json { .. } => ErrorClass::Validation,
            _ => ErrorClass::Numerical,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
