use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{LickorishReport, ObstructionError, TheoremReport};

/// Crosscap data and known band counts supplied by the user.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExternalBounds {
    pub gamma: Option<u64>,
    pub gamma_star: Option<u64>,
    pub known_band_count: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputsUsed {
    pub determinant_nontrivial: bool,
    pub theorem_obstruction: bool,
    pub lickorish_obstruction: bool,
    pub gamma: bool,
    pub gamma_star: bool,
    pub known_band_count: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: u64,
    pub upper: Option<u64>,
    pub exact: Option<u64>,
    pub inputs_used: InputsUsed,
}

/// Combines the obstructions with `γ*(K) ≤ u₂(K) ≤ γ(K)` and any known
/// sequence of band moves to the unknot.
pub fn u2_bounds(
    thm: &TheoremReport,
    lick: &LickorishReport,
    p: &BigInt,
    ext: &ExternalBounds,
) -> Result<BoundsReport, ObstructionError> {
    if let (Some(g), Some(gs)) = (ext.gamma, ext.gamma_star) {
        if gs > g {
            return Err(ObstructionError::InconsistentBounds(format!("gamma_star {gs} exceeds gamma {g}")));
        }
    }
    let mut used = InputsUsed::default();
    let mut lower = 0;
    if !p.is_one() {
        lower = 1;
        used.determinant_nontrivial = true;
    }
    if thm.is_obstructed() || lick.is_obstructed() {
        lower = lower.max(2);
        used.theorem_obstruction = thm.is_obstructed();
        used.lickorish_obstruction = lick.is_obstructed();
    }
    if let Some(gs) = ext.gamma_star {
        lower = lower.max(gs);
        used.gamma_star = true;
    }
    let mut upper: Option<u64> = None;
    if let Some(g) = ext.gamma {
        upper = Some(g);
        used.gamma = true;
    }
    if let Some(b) = ext.known_band_count {
        upper = Some(upper.map_or(b, |u| u.min(b)));
        used.known_band_count = true;
    }
    if let Some(u) = upper {
        if lower > u {
            return Err(ObstructionError::InconsistentBounds(format!("lower bound {lower} exceeds upper bound {u}")));
        }
    }
    Ok(BoundsReport { lower, upper, exact: upper.filter(|&u| u == lower), inputs_used: used })
}
