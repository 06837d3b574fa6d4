use thiserror::Error;

use crate::exactmath::SeriesError;
use crate::variety::InvalidInstance;

/// Failures of the exact pipeline. Apart from [`Error::Invalid`] and
/// [`Error::IndexRange`]/[`Error::NotCaseThree`] (caller misuse), every
/// variant signals an arithmetic inconsistency that should never occur.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Invalid(#[from] InvalidInstance),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("(prod d_i) * c_N = {value} is not an integer")]
    NonIntegerEuler { value: String },
    #[error("Chern coefficient c_{index} = {value} is not an integer")]
    NonIntegerChern { index: usize, value: String },
    #[error("primitive dimension chi - (N+1) = {value} is negative")]
    NegativePrimitiveDim { value: String },
    #[error("mirror coefficient I_0 = {value}, expected 0")]
    MirrorNormalization { value: String },
    #[error("index {what} = {value} outside the valid range {range}")]
    IndexRange {
        what: &'static str,
        value: i64,
        range: String,
    },
    #[error("lambda is only defined for even N with rho = 1 (got N = {dim}, rho = {rho})")]
    NotCaseThree { dim: u32, rho: i64 },
    #[error("primitive dimension is zero; cannot divide N' * lambda by N'")]
    ZeroPrimitiveDim,
    #[error("lambda routes disagree: {detail}")]
    LambdaMismatch { detail: String },
    #[error("ambient spectrum {spectrum} disagrees with characteristic polynomial {char_poly}")]
    AmbientSpectrumMismatch { spectrum: String, char_poly: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
