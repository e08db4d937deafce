//! Shared error type.

use thiserror::Error;

use crate::stencil::ValidityReport;

/// Errors produced by construction, conversion, and validation routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Qudit dimension below 2; the phase space degenerates at d = 1.
    #[error("qudit dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    /// A root-of-unity order or delta period of zero.
    #[error("period must be positive")]
    ZeroPeriod,

    /// Two objects with different qudit dimensions were combined.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A construction that only exists for one parity of d got the other.
    #[error("{what} requires {required} d (got d = {d})")]
    ParityMismatch {
        what: &'static str,
        required: &'static str,
        d: usize,
    },

    /// An operation that requires a valid stencil received an invalid one.
    #[error("stencil '{label}' is not valid: {report}")]
    InvalidStencil {
        label: String,
        report: ValidityReport,
    },

    /// Negativity was requested for a grid with a non-negligible imaginary part.
    #[error("grid is not real: max imaginary magnitude {0:e} exceeds 1e-8")]
    NonRealGrid(f64),

    /// The stencil sampler met contradictory phase constraints.
    #[error("stencil sampler hit contradictory constraints at grid point ({0}, {1})")]
    SamplerConflict(i64, i64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    /// A file parsed as JSON but violated the expected schema.
    #[error("malformed file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
