use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("singular matrix: |det| = {det_mag:.3e} is below the threshold {threshold:.3e}")]
    SingularMatrix { det_mag: f64, threshold: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("spectral parameter {0} is too close to the real axis")]
    RealEigenvalue(String),

    #[error("duplicate spectral parameter {0}")]
    DuplicateEigenvalue(String),

    #[error("spectral parameter {0} collides with the defect eigenvalue pair")]
    ForbiddenEigenvalue(String),

    #[error("degenerate dressing data at fold {index}: dressed vector norm underflowed")]
    DegenerateDressing { index: usize },

    #[error("unsupported seed: {0}")]
    UnsupportedSeed(String),

    #[error("defect root is complex: beta^2 - |jump|^2 = {deficit:.3e}")]
    ComplexOmega { deficit: f64 },

    #[error("dressing matrix is singular at lambda = {0}")]
    SingularDressing(String),

    #[error("exponent magnitude {exponent:.1} exceeds the overflow guard")]
    OverflowRange { exponent: f64 },

    #[error("init component {index} is zero; norming constant undefined")]
    ZeroComponent { index: usize },

    #[error("peak not found: {0}")]
    PeakNotFound(String),

    #[error("config parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("config schema violation: {0}")]
    SchemaViolation(String),

    #[error("invalid config value for `{field}`: {message}")]
    InvariantViolation { field: String, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
