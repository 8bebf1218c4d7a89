//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector is not a root of the affine root system: {0}")]
    NotARoot(String),

    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),

    #[error("weight is not strictly dominant (required for anti-symmetric family): {0:?}")]
    NotStrictlyDominant(Vec<i64>),

    #[error("polynomial is not Weyl-group invariant")]
    NotInvariant,

    #[error("degenerate spectrum at these parameters: weights {a:?} and {b:?} share a spectral point")]
    DegenerateSpectrum { a: Vec<i64>, b: Vec<i64> },

    #[error("eigenspace for weight {lam:?} has dimension {dim}, expected 1 (non-generic parameters?)")]
    BadKernel { lam: Vec<i64>, dim: usize },

    #[error("evaluation hits a pole: {0}")]
    Pole(String),

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
