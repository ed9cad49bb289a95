use thiserror::Error;

/// Errors for matrix, labeling, and simulation operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("not Hermitian at ({row}, {col}): |m - m†| component = {delta:e}")]
    NotHermitian { row: usize, col: usize, delta: f64 },

    #[error("not a state: eigenvalue {value:e} below the negativity floor")]
    NotAState { value: f64 },

    #[error("unnormalized: trace = {trace}, expected 1")]
    Unnormalized { trace: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("empty input")]
    Empty,

    #[error("eigendecomposition did not converge")]
    EigenFailed,

    #[error("labeling factors {factors:?} do not multiply to {total}")]
    BadFactors { factors: Vec<usize>, total: usize },

    #[error("unsupported axis set {axes:?} for {nfactors} factors")]
    BadAxes { axes: Vec<usize>, nfactors: usize },

    #[error("index {index} out of range 0..{len}")]
    OutOfRange { index: usize, len: usize },

    #[error("probabilities sum to {sum}, expected 1")]
    NotNormalized { sum: f64 },

    #[error("negative probability {value:e} at index {index}")]
    NegativeProbability { index: usize, value: f64 },

    #[error("shift {given} below spectral floor; minimum admissible shift is {required}")]
    ShiftBelowFloor { given: f64, required: f64 },

    #[error("normalization denominator {denom} is not positive")]
    DegenerateNormalization { denom: f64 },

    #[error("q = {q} too close to 1 for the deformed entropy; use the Shannon form")]
    DeformationParameterNearOne { q: f64 },

    #[error("invalid spin {j}: 2j must be a nonnegative integer")]
    InvalidSpin { j: f64 },

    #[error("angle {name} = {value} outside {range}")]
    AngleOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("excitation number {n} exceeds the supported maximum {max}")]
    ExcitationTooLarge { n: u32, max: u32 },

    #[error("invalid frequency profile: {0}")]
    BadProfile(String),

    #[error("integration failed near t = {t}: {reason}")]
    IntegrationFailed { t: f64, reason: &'static str },

    #[error("time {t} outside the integrated window [0, {t_max}]")]
    TimeOutOfRange { t: f64, t_max: f64 },

    #[error("quadrature did not reach the requested accuracy")]
    QuadratureFailed,

    #[error("degenerate quadrature frame (mu, nu) = (0, 0)")]
    DegenerateFrame,

    #[error("invalid dispersion data: {0}")]
    BadDispersions(&'static str),

    #[error("domain error: {0}")]
    Domain(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
