use crate::diagram::DiagramError;
use crate::exactmat::MatrixError;
use crate::obstruction::ObstructionError;
use crate::quadform::QuadformError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Quadform(#[from] QuadformError),
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
    #[error("invalid job: {0}")]
    InvalidJob(String),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Error name as reported on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Matrix(e) => e.name(),
            Error::Diagram(e) => e.name(),
            Error::Quadform(e) => e.name(),
            Error::Obstruction(e) => e.name(),
            Error::InvalidJob(_) => "InvalidJob",
            Error::OracleMismatch(_) => "OracleMismatch",
            Error::Internal(_) => "Internal",
        }
    }

    /// Whether the error reflects a broken invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::OracleMismatch(_) | Error::Internal(_) | Error::Diagram(DiagramError::NoDefiniteColoring))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
