use thiserror::Error;

use crate::region::FailedCondition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has {n} vertices, exceeding the enumeration limit of {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("maximum degree {delta} is below 2; use exact evaluation for such graphs")]
    UnsupportedDegree { delta: usize },

    #[error("analytic degree bound {delta} is smaller than the graph's maximum degree {max_degree}")]
    DeltaBelowMaxDegree { delta: usize, max_degree: usize },

    #[error("auxiliary parameter a must be positive and finite, got {0}")]
    InvalidAuxiliary(f64),

    #[error("x must be nonzero")]
    ZeroX,

    #[error("|x| = {abs_x} does not exceed (Δ-1)e^a = {threshold}; the polymer series diverges")]
    DivergentSeries { abs_x: f64, threshold: f64 },

    #[error("point outside the certified zero-free region ({reason})")]
    OutsideRegion { reason: FailedCondition },

    #[error("epsilon must lie in (0, 1), got {0}")]
    InvalidEpsilon(f64),

    #[error("truncation order m = {m} exceeds the cap {cap}; use a larger epsilon, a different a, or raise the cap")]
    TruncationCap { m: usize, cap: usize },

    #[error("normalized series must start with a_0 = 1, got {0}")]
    NotNormalized(num_complex::Complex64),

    #[error("{path}: {source}")]
    Input {
        path: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::OutsideRegion { .. } | Error::DivergentSeries { .. } => 2,
            Error::SizeLimit { .. } | Error::TruncationCap { .. } => 3,
            Error::Input { source, .. } => source.exit_code(),
            _ => 1,
        }
    }

    pub fn with_path(self, path: impl Into<String>) -> Self {
        Error::Input {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
