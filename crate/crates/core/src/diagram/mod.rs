//! Knot diagrams: PD-code parsing, face reconstruction, checkerboard
//! coloring and Goeritz matrices.

mod faces;
mod goeritz;
mod pd;
mod pretzel;

pub use faces::{faces, is_reduced, EdgeSide, Face, FaceSet};
pub use goeritz::{
    checkerboard, coloring, goeritz_candidate, goeritz_from_matrix, goeritz_from_pd, goeritz_from_pd_with_class,
    goeritz_from_pretzel, goeritz_unknot, ColorClass, Coloring, GoeritzResult, Provenance,
};
pub use pd::{parse_pd, PdCode};
pub use pretzel::pretzel_pd;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("bad edge labels: {0}")]
    LabelError(String),
    #[error("inconsistent diagram: {0}")]
    InconsistentDiagram(String),
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("diagram has a nugatory crossing")]
    NotReduced,
    #[error("no checkerboard class gives a positive-definite Goeritz matrix")]
    NoDefiniteColoring,
    #[error("not a knot: {0}")]
    NotAKnot(String),
    #[error("determinant {0} is even")]
    EvenDeterminant(BigInt),
    #[error("neither the matrix nor its negative is positive definite")]
    Indefinite,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("face index {index} out of range ({available} black faces)")]
    InvalidFace { index: usize, available: usize },
}

impl DiagramError {
    pub fn name(&self) -> &'static str {
        match self {
            DiagramError::SyntaxError { .. } => "SyntaxError",
            DiagramError::LabelError(_) => "LabelError",
            DiagramError::InconsistentDiagram(_) => "InconsistentDiagram",
            DiagramError::NotAlternating => "NotAlternating",
            DiagramError::NotReduced => "NotReduced",
            DiagramError::NoDefiniteColoring => "NoDefiniteColoring",
            DiagramError::NotAKnot(_) => "NotAKnot",
            DiagramError::EvenDeterminant(_) => "EvenDeterminant",
            DiagramError::Indefinite => "Indefinite",
            DiagramError::InvalidParameter(_) => "InvalidParameter",
            DiagramError::InvalidFace { .. } => "InvalidFace",
        }
    }
}
