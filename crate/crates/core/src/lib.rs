//! Obstructions to a knot having H(2)-unknotting number one.
//!
//! The pipeline takes a Goeritz matrix (directly, from a pretzel triple, or
//! from a PD code of a reduced alternating diagram), computes the group it
//! presents and the exact table of characteristic-vector minima `M_Q`, and
//! runs two tests: the correction-term comparison against the rank-one
//! surgery form, and the classical linking-form condition. Everything is done
//! in exact integer and rational arithmetic.

pub mod diagram;
mod error;
pub mod exactmat;
pub mod job;
pub mod obstruction;
pub mod quadform;
pub mod render;

pub use error::{Error, Result};
