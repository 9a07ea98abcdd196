//! Error types shared across the library.

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// SVD requested on an all-zero or non-finite matrix.
    #[error("degenerate matrix: {0}")]
    DegenerateMatrix(String),

    /// Gram system M^T M is singular and no ridge was applied.
    #[error("singular Gram system (lambda = 0 and rank-deficient factor)")]
    SingularGram,

    /// Orthonormalization failed because the columns are linearly dependent.
    #[error("rank-deficient input: column {0} is in the span of earlier columns")]
    RankDeficient(usize),

    /// Matrix dimensions do not agree.
    #[error("shape mismatch: {0}")]
    ShapeError(String),

    /// SCA blending weight outside (0, 1].
    #[error("invalid step size beta = {0}; must satisfy 0 < beta <= 1")]
    InvalidStepSize(f64),

    /// Error-feedback share count must be positive.
    #[error("invalid active device count: 0")]
    InvalidActiveCount,

    /// Sparsifier budget out of range.
    #[error("invalid k = {k}; must satisfy 1 <= k <= {max}")]
    InvalidK { k: usize, max: usize },

    /// Packed block needs more channel uses than the coherence period allows.
    #[error("packet needs {needed} channel uses but coherence period is {tau}")]
    CoherenceExceeded { needed: usize, tau: usize },

    /// A channel matrix does not have the rank zero-forcing requires.
    #[error("channel for device {0} is rank-deficient; zero-forcing impossible")]
    ChannelDegenerate(usize),

    /// The receive-kernel Gram F^H H H^H F is not invertible.
    #[error("beamformer design singular for device {0}")]
    BeamformerSingular(usize),

    /// Dataset or shard is empty.
    #[error("empty dataset")]
    EmptyData,

    /// Loss or gradient became non-finite.
    #[error("numerical divergence at round {round}: {what}")]
    NumericalDivergence { round: usize, what: String },

    /// Configuration failed validation.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
