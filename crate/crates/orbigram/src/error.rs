//! Crate-wide error type. Every fallible operation returns [`Result`].

/// Errors raised by construction, numeric kernels, decision procedures, and file I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A point or translation vector does not live in the element's ambient dimension.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Two images that must share a shape do not.
    #[error("shape mismatch: left is {left_n}x{left_k}, right is {right_n}x{right_k}")]
    ShapeMismatch {
        left_n: usize,
        left_k: usize,
        right_n: usize,
        right_k: usize,
    },

    /// The linear part of an affine element fails the rank tolerance.
    #[error("linear part is singular within rank tolerance")]
    SingularLinearPart,

    /// A claimed rotation matrix is not orthogonal within tolerance.
    #[error("matrix is not orthogonal: max deviation {deviation:.3e} exceeds tolerance {tol:.3e}")]
    NotOrthogonal { deviation: f64, tol: f64 },

    /// An operation that needs a nondegenerate configuration received one whose
    /// centered matrix vanishes (all points coincide, or a zero cross matrix in
    /// similarity alignment).
    #[error("degenerate image: centered configuration carries no shape information")]
    DegenerateImage,

    /// An iterative eigensolver or SVD exceeded its sweep budget.
    #[error("failed to converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },

    /// The brute-force rotation oracle only covers the plane and 3-space.
    #[error("brute-force search supports dimension 2 or 3, got {0}")]
    UnsupportedDimension(usize),

    /// An image matrix contains a NaN or infinity, or has a zero extent.
    #[error("invalid image: {0}")]
    InvalidImage(String),

    /// Malformed input file; positions are 1-based.
    #[error("parse error in {path} at line {line}, field {field}: {message}")]
    Parse {
        path: String,
        line: usize,
        field: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
