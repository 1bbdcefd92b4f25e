//! Error type shared across the toolkit.

use thiserror::Error;

/// Errors produced by state algebra, sampling, distributions, and the
/// experiment driver.
#[derive(Debug, Error)]
pub enum Error {
    #[error("incompatible systems: dimension {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("local dimension must be at least 2, got {0}")]
    LocalDimTooSmall(usize),

    #[error("amplitude vector has length {got}, expected {expected}")]
    BadAmplitudeCount { got: usize, expected: usize },

    #[error("state norm is {norm}, not 1 within tolerance")]
    NotNormalized { norm: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimension {0} is not a perfect square of a local dimension")]
    NotBipartite(usize),

    #[error("matrix is not Hermitian within tolerance (max deviation {max_dev})")]
    NotHermitian { max_dev: f64 },

    #[error("trace is {trace}, not 1 within tolerance")]
    BadTrace { trace: f64 },

    #[error("matrix has negative eigenvalue {0}")]
    NotPositiveSemidefinite(f64),

    #[error("matrix is not unitary within tolerance (max deviation {max_dev})")]
    NotUnitary { max_dev: f64 },

    #[error("invalid Schmidt spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("{param} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        param: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("empty sample set")]
    EmptySamples,

    #[error("histogram needs at least 2 bins, got {0}")]
    TooFewBins(usize),

    #[error("histogram binning mismatch: {left} vs {right} bins")]
    BinningMismatch { left: usize, right: usize },

    #[error("KL divergence undefined: bin {bin} has p = {p} but m = 0")]
    DivergenceUndefined { bin: usize, p: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("config file: {0}")]
    ConfigParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
