//! The group presented by a Goeritz matrix and the per-class minima
//! `M_Q(α) = min { (ξᵗQ⁻¹ξ − k)/4 : ξ characteristic, [ξ] = α }`.

mod closed_form;
mod enumerate;
mod group;
mod oracle;

pub use closed_form::closed_form_rank1;
pub use enumerate::{certified_box_radius, mq_table, mq_table_bounded};
pub use group::{class_index, group_of, is_characteristic, FiniteAbelianGroup};
pub use oracle::{mq_bruteforce, PartialTable};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exactmat::{serde_int, Rational};

/// Largest group order for which a full table is built.
pub const MAX_TABULATED_ORDER: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuadformError {
    #[error("determinant {0} is even")]
    EvenDeterminant(BigInt),
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("group is not cyclic (invariant factors {0:?})")]
    NonCyclic(Vec<BigInt>),
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("modulus {0} is even")]
    EvenModulus(u64),
    #[error("index {i} out of range for modulus {p}")]
    OutOfRange { p: u64, i: u64 },
    #[error("group order {0} too large to tabulate")]
    GroupTooLarge(BigInt),
    #[error("enumeration radius {radius} exceeded the configured limit")]
    EnumerationLimit { radius: BigInt },
}

impl QuadformError {
    pub fn name(&self) -> &'static str {
        match self {
            QuadformError::EvenDeterminant(_) => "EvenDeterminant",
            QuadformError::NotPositiveDefinite => "NotPositiveDefinite",
            QuadformError::NonCyclic(_) => "NonCyclic",
            QuadformError::DimensionMismatch { .. } => "DimensionMismatch",
            QuadformError::EvenModulus(_) => "EvenModulus",
            QuadformError::OutOfRange { .. } => "OutOfRange",
            QuadformError::GroupTooLarge(_) => "GroupTooLarge",
            QuadformError::EnumerationLimit { .. } => "EnumerationLimit",
        }
    }
}

/// Exact `M_Q` value for every class `i·g₀` of a cyclic group, with the
/// lexicographically smallest characteristic vector attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MqTable {
    pub p: u64,
    #[serde(with = "serde_int::vec")]
    pub generator: Vec<BigInt>,
    pub values: Vec<Rational>,
    #[serde(with = "serde_int::vec_vec")]
    pub witnesses: Vec<Vec<BigInt>>,
    /// Bound `B` on `ξᵗQ⁻¹ξ` below which the enumeration was complete.
    pub certified_radius: Rational,
}

impl MqTable {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Table relabelled by the automorphism `i ↦ u·i` of `Z/p`.
    pub fn relabeled(&self, u: u64) -> MqTable {
        let p = self.p;
        let idx = |i: u64| ((u as u128 * i as u128) % p as u128) as usize;
        MqTable {
            p,
            generator: self.generator.clone(),
            values: (0..p).map(|i| self.values[idx(i)].clone()).collect(),
            witnesses: (0..p).map(|i| self.witnesses[idx(i)].clone()).collect(),
            certified_radius: self.certified_radius.clone(),
        }
    }

    /// Values sorted, for comparisons that ignore class labels.
    pub fn value_multiset(&self) -> Vec<Rational> {
        let mut v = self.values.clone();
        v.sort();
        v
    }
}
