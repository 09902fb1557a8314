//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! floating point anywhere on the computational path.

mod matrix;
mod rational;
pub mod serde_int;
mod snf;

pub use matrix::{IntMatrix, IntSymMatrix};
pub use rational::{ParseRationalError, Rational};
pub use snf::{smith_normal_form, SnfDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

impl MatrixError {
    pub fn name(&self) -> &'static str {
        match self {
            MatrixError::NotSquare { .. } => "NotSquare",
            MatrixError::NotSymmetric => "NotSymmetric",
            MatrixError::Singular => "SingularMatrix",
            MatrixError::DimensionMismatch { .. } => "DimensionMismatch",
        }
    }
}

/// Integer square root, `floor(sqrt(n))` for `n ≥ 0`.
pub fn isqrt(n: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_traits::Zero;
    assert!(!num_traits::Signed::is_negative(n), "isqrt of negative");
    if n.is_zero() {
        return n.clone();
    }
    n.sqrt()
}
