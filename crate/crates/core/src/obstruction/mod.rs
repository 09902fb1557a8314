//! Obstructions to H(2)-unknotting number one.
//!
//! For an alternating knot with positive-definite Goeritz matrix `Q` and
//! `p = det Q`, `u₂ = 1` forces an isomorphism `φ: Z/p → G` and a sign `ε`
//! with `ε·M_Q(φ(i)) − M_A(i)` an even integer `≤ 0` for every `i`, where
//! `M_A` is the rank-one table of the surgery form `(p)`.

mod bounds;
mod lickorish;
mod theorem;

pub use bounds::{u2_bounds, BoundsReport, ExternalBounds, InputsUsed};
pub use lickorish::{lickorish_check, LickorishReport, LickorishVerdict};
pub use theorem::{
    check_pair_full, classify, theorem_check, FailureKind, TheoremReason, TheoremReport, TheoremVerdict, Trial,
    TrialOutcome,
};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::diagram::{GoeritzResult, Provenance};
use crate::exactmat::{serde_int, IntSymMatrix};
use crate::quadform::{group_of, mq_table_bounded, MqTable, QuadformError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObstructionError {
    #[error("inconsistent bounds: {0}")]
    InconsistentBounds(String),
    #[error(transparent)]
    Quadform(#[from] QuadformError),
}

impl ObstructionError {
    pub fn name(&self) -> &'static str {
        match self {
            ObstructionError::InconsistentBounds(_) => "InconsistentBounds",
            ObstructionError::Quadform(e) => e.name(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub bounds: ExternalBounds,
    /// Give up once the enumeration radius exceeds this.
    pub max_radius: Option<BigInt>,
}

/// Everything computed for one knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub input: Provenance,
    pub matrix: IntSymMatrix,
    pub mirrored: bool,
    #[serde(with = "serde_int::scalar")]
    pub p: BigInt,
    #[serde(with = "serde_int::vec")]
    pub invariant_factors: Vec<BigInt>,
    #[serde(with = "serde_int::option_vec")]
    pub generator: Option<Vec<BigInt>>,
    pub mq_table: Option<MqTable>,
    pub theorem: TheoremReport,
    pub lickorish: LickorishReport,
    pub u2_bounds: BoundsReport,
}

/// Group, `M_Q` table, both obstructions and the combined bounds.
pub fn analyze(g: &GoeritzResult, opts: &AnalyzeOptions) -> Result<ObstructionReport, ObstructionError> {
    let group = group_of(&g.q)?;
    let (table, theorem) = if group.is_cyclic() {
        let table = mq_table_bounded(&g.q, &group, opts.max_radius.as_ref())?;
        let report = theorem_check(&table);
        (Some(table), report)
    } else {
        (None, TheoremReport::noncyclic())
    };
    let lickorish = lickorish_check(&g.q, &group);
    let bounds = u2_bounds(&theorem, &lickorish, &group.order, &opts.bounds)?;
    Ok(ObstructionReport {
        input: g.provenance.clone(),
        matrix: g.q.clone(),
        mirrored: g.mirrored,
        p: group.order.clone(),
        invariant_factors: group.invariant_factors.clone(),
        generator: group.generator.clone(),
        mq_table: table,
        theorem,
        lickorish,
        u2_bounds: bounds,
    })
}

#[cfg(test)]
mod tests;
