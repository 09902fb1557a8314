use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactmat::Rational;
use crate::quadform::{closed_form_rank1, MqTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremVerdict {
    Obstructed,
    NotObstructed,
    Vacuous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremReason {
    NoncyclicGroup,
    AllPairsFail,
    OrderOne,
}

/// Why a condition failed, checked in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    NotInteger,
    OddInteger,
    PositiveValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum TrialOutcome {
    Pass,
    Fail { i: u64, kind: FailureKind, value: Rational },
}

/// One candidate `(ε, φ_a)` with `φ_a(i) = a·i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trial {
    pub epsilon: i8,
    pub a: u64,
    pub outcome: TrialOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub verdict: TheoremVerdict,
    pub reason: Option<TheoremReason>,
    /// First passing `(ε, a)`.
    pub witness: Option<(i8, u64)>,
    pub trials: Vec<Trial>,
}

impl TheoremReport {
    pub fn is_obstructed(&self) -> bool {
        self.verdict == TheoremVerdict::Obstructed
    }

    /// Report for a non-cyclic group: no isomorphism from `Z/p` exists.
    pub fn noncyclic() -> Self {
        TheoremReport {
            verdict: TheoremVerdict::Obstructed,
            reason: Some(TheoremReason::NoncyclicGroup),
            witness: None,
            trials: Vec::new(),
        }
    }
}

/// Classifies one value of `I_{φ,ε}(i)`.
pub fn classify(value: &Rational) -> Option<FailureKind> {
    match value.to_integer() {
        None => Some(FailureKind::NotInteger),
        Some(n) if n.is_odd() => Some(FailureKind::OddInteger),
        Some(_) if value.is_positive() => Some(FailureKind::PositiveValue),
        Some(_) => None,
    }
}

/// `I(i) = ε·M_Q(a·i) − M_A(i)`.
fn value_at(table: &MqTable, rank1: &[Rational], epsilon: i8, a: u64, i: u64) -> Rational {
    let idx = ((a as u128 * i as u128) % table.p as u128) as usize;
    let m = table.values[idx].clone();
    let signed = if epsilon > 0 { m } else { -m };
    signed - rank1[i as usize].clone()
}

/// Tests every sign `ε` and every unit `a mod p`.
///
/// Uses `I(i) = I(p−i)` to check only `i ≤ (p−1)/2`; the first failing `i`
/// is the same as in a full scan.
pub fn theorem_check(table: &MqTable) -> TheoremReport {
    let p = table.p;
    if p == 1 {
        return TheoremReport {
            verdict: TheoremVerdict::Vacuous,
            reason: Some(TheoremReason::OrderOne),
            witness: None,
            trials: Vec::new(),
        };
    }
    let half = (p - 1) / 2;
    let rank1: Vec<Rational> = (0..=half).map(|i| closed_form_rank1(p, i).expect("odd p, i < p")).collect();

    let mut trials = Vec::new();
    for epsilon in [1i8, -1] {
        for a in (1..p).filter(|a| a.gcd(&p) == 1) {
            let outcome = (0..=half)
                .find_map(|i| {
                    let value = value_at(table, &rank1, epsilon, a, i);
                    classify(&value).map(|kind| TrialOutcome::Fail { i, kind, value })
                })
                .unwrap_or(TrialOutcome::Pass);
            trials.push(Trial { epsilon, a, outcome });
        }
    }
    summarize(trials)
}

fn summarize(trials: Vec<Trial>) -> TheoremReport {
    let witness = trials.iter().find(|t| t.outcome == TrialOutcome::Pass).map(|t| (t.epsilon, t.a));
    let (verdict, reason) = match witness {
        Some(_) => (TheoremVerdict::NotObstructed, None),
        None => (TheoremVerdict::Obstructed, Some(TheoremReason::AllPairsFail)),
    };
    TheoremReport { verdict, reason, witness, trials }
}

/// Checks one `(ε, a)` over all `i ∈ [0, p)`, without the symmetry shortcut.
pub fn check_pair_full(table: &MqTable, epsilon: i8, a: u64) -> TrialOutcome {
    let p = table.p;
    let rank1: Vec<Rational> = (0..p).map(|i| closed_form_rank1(p, i).expect("odd p, i < p")).collect();
    (0..p)
        .find_map(|i| {
            let value = value_at(table, &rank1, epsilon, a, i);
            classify(&value).map(|kind| TrialOutcome::Fail { i, kind, value })
        })
        .unwrap_or(TrialOutcome::Pass)
}
