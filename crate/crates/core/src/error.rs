use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's documented domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The conjugate diameters are collinear or zero, so the unit-circle map
    /// cannot be inverted.
    #[error("degenerate ellipse: conjugate diameters are collinear or zero")]
    DegenerateEllipse,

    /// The scene document is not valid JSON.
    #[error("scene parse error: {0}")]
    Parse(#[source] serde_json::Error),

    /// The scene document is valid JSON but violates the scene schema.
    #[error("scene validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
