use num_bigint::BigInt;

use super::*;
use crate::diagram::{goeritz_from_matrix, goeritz_from_pretzel, goeritz_unknot};
use crate::exactmat::{IntSymMatrix, Rational};
use crate::quadform::{group_of, mq_table};

fn sym(rows: &[Vec<i64>]) -> IntSymMatrix {
    IntSymMatrix::from_rows(rows).unwrap()
}

fn table_of(rows: &[Vec<i64>]) -> MqTable {
    let q = sym(rows);
    mq_table(&q, &group_of(&q).unwrap()).unwrap()
}

#[test]
fn classify_order() {
    assert_eq!(classify(&Rational::new(1, 2)), Some(FailureKind::NotInteger));
    assert_eq!(classify(&Rational::from(-65)), Some(FailureKind::OddInteger));
    assert_eq!(classify(&Rational::from(3)), Some(FailureKind::OddInteger));
    assert_eq!(classify(&Rational::from(4)), Some(FailureKind::PositiveValue));
    assert_eq!(classify(&Rational::from(-54)), None);
    assert_eq!(classify(&Rational::zero()), None);
}

#[test]
fn pretzel_13_4_11_is_obstructed() {
    let t = table_of(&[vec![17, -4], vec![-4, 15]]);
    let r = theorem_check(&t);
    assert_eq!(r.verdict, TheoremVerdict::Obstructed);
    assert_eq!(r.reason, Some(TheoremReason::AllPairsFail));
    assert_eq!(r.trials.len(), 2 * 238);
    for trial in r.trials.iter().filter(|t| t.epsilon == -1) {
        assert_eq!(
            trial.outcome,
            TrialOutcome::Fail { i: 0, kind: FailureKind::OddInteger, value: Rational::from(-65) }
        );
    }
    let positive: Vec<u64> = r
        .trials
        .iter()
        .filter(|t| matches!(t.outcome, TrialOutcome::Fail { i: 1, kind: FailureKind::PositiveValue, .. }))
        .map(|t| t.a)
        .collect();
    assert_eq!(positive, vec![15, 224]);
    for trial in r.trials.iter().filter(|t| t.epsilon == 1) {
        let TrialOutcome::Fail { i, kind, value } = &trial.outcome else { panic!("pass") };
        assert_eq!(*i, 1);
        if trial.a == 15 || trial.a == 224 {
            assert_eq!(*value, Rational::from(4));
        } else {
            assert_eq!(*kind, FailureKind::NotInteger);
        }
    }
    // I(0) for ε = +1
    let i0 = t.values[0].clone() - Rational::new(119, 2);
    assert_eq!(i0, Rational::from(-54));
}

#[test]
fn trefoil_passes_with_negative_sign() {
    let t = table_of(&[vec![2, -1], vec![-1, 2]]);
    let r = theorem_check(&t);
    assert_eq!(r.verdict, TheoremVerdict::NotObstructed);
    assert_eq!(r.witness, Some((-1, 1)));
    assert_eq!(check_pair_full(&t, -1, 1), TrialOutcome::Pass);
    assert_eq!(check_pair_full(&t, -1, 2), TrialOutcome::Pass);
    assert_eq!(
        r.trials[0].outcome,
        TrialOutcome::Fail { i: 0, kind: FailureKind::OddInteger, value: Rational::from(-1) }
    );
}

#[test]
fn order_one_is_vacuous() {
    let r = theorem_check(&table_of(&[vec![1]]));
    assert_eq!(r.verdict, TheoremVerdict::Vacuous);
    assert_eq!(r.reason, Some(TheoremReason::OrderOne));
    assert!(!r.is_obstructed());
}

#[test]
fn lickorish_examples() {
    let fig8 = sym(&[vec![2, -1], vec![-1, 3]]);
    let r = lickorish_check(&fig8, &group_of(&fig8).unwrap());
    assert_eq!(r.lambda, Some(Rational::new(2, 5)));
    assert_eq!(r.x, None);
    assert_eq!(r.verdict, LickorishVerdict::Obstructed);

    let pz = sym(&[vec![17, -4], vec![-4, 15]]);
    let r = lickorish_check(&pz, &group_of(&pz).unwrap());
    assert_eq!(r.lambda, Some(Rational::new(17, 239)));
    assert_eq!(r.x, Some(15));
    assert_eq!(r.lambda_at_x, Some(Rational::new(1, 239)));
    assert_eq!(r.verdict, LickorishVerdict::NotObstructed);

    let tre = sym(&[vec![2, -1], vec![-1, 2]]);
    let r = lickorish_check(&tre, &group_of(&tre).unwrap());
    assert_eq!(r.lambda, Some(Rational::new(2, 3)));
    assert_eq!(r.x, Some(1));
    assert_eq!(r.verdict, LickorishVerdict::NotObstructed);

    let nc = IntSymMatrix::diagonal(&[3, 3]);
    let r = lickorish_check(&nc, &group_of(&nc).unwrap());
    assert!(!r.cyclic);
    assert_eq!(r.verdict, LickorishVerdict::Obstructed);

    let unknot = IntSymMatrix::empty();
    let r = lickorish_check(&unknot, &group_of(&unknot).unwrap());
    assert_eq!(r.verdict, LickorishVerdict::NotObstructed);
    assert_eq!(r.x, Some(0));
}

fn report(verdict: TheoremVerdict) -> TheoremReport {
    TheoremReport { verdict, reason: None, witness: None, trials: vec![] }
}

fn lick(obstructed: bool) -> LickorishReport {
    LickorishReport {
        verdict: if obstructed { LickorishVerdict::Obstructed } else { LickorishVerdict::NotObstructed },
        cyclic: true,
        lambda: None,
        x: None,
        lambda_at_x: None,
    }
}

#[test]
fn bounds_examples() {
    let ext = |g: Option<u64>, gs: Option<u64>, b: Option<u64>| ExternalBounds {
        gamma: g,
        gamma_star: gs,
        known_band_count: b,
    };
    let b = u2_bounds(&report(TheoremVerdict::Obstructed), &lick(false), &BigInt::from(239), &ext(Some(2), None, None))
        .unwrap();
    assert_eq!((b.lower, b.upper, b.exact), (2, Some(2), Some(2)));
    assert!(b.inputs_used.theorem_obstruction && b.inputs_used.gamma && !b.inputs_used.lickorish_obstruction);

    let b =
        u2_bounds(&report(TheoremVerdict::Vacuous), &lick(false), &BigInt::from(1), &ext(None, None, None)).unwrap();
    assert_eq!((b.lower, b.upper, b.exact), (0, None, None));

    let b =
        u2_bounds(&report(TheoremVerdict::NotObstructed), &lick(false), &BigInt::from(3), &ext(Some(1), None, None))
            .unwrap();
    assert_eq!((b.lower, b.upper, b.exact), (1, Some(1), Some(1)));

    let b = u2_bounds(
        &report(TheoremVerdict::NotObstructed),
        &lick(true),
        &BigInt::from(5),
        &ext(Some(4), Some(3), Some(3)),
    )
    .unwrap();
    assert_eq!((b.lower, b.upper, b.exact), (3, Some(3), Some(3)));

    assert!(matches!(
        u2_bounds(&report(TheoremVerdict::Obstructed), &lick(false), &BigInt::from(239), &ext(Some(1), None, None)),
        Err(ObstructionError::InconsistentBounds(_))
    ));
    assert!(matches!(
        u2_bounds(&report(TheoremVerdict::NotObstructed), &lick(false), &BigInt::from(3), &ext(Some(1), Some(2), None)),
        Err(ObstructionError::InconsistentBounds(_))
    ));
}

#[test]
fn analyze_pipeline_examples() {
    let opts = AnalyzeOptions { bounds: ExternalBounds { gamma: Some(2), ..Default::default() }, ..Default::default() };
    let r = analyze(&goeritz_from_pretzel(13, 4, 11).unwrap(), &opts).unwrap();
    assert!(r.theorem.is_obstructed());
    assert!(!r.lickorish.is_obstructed());
    assert_eq!(r.u2_bounds.lower, 2);
    assert_eq!(r.u2_bounds.exact, Some(2));

    let r =
        analyze(&goeritz_from_matrix(&sym(&[vec![2, -1], vec![-1, 3]])).unwrap(), &AnalyzeOptions::default()).unwrap();
    assert!(r.lickorish.is_obstructed());
    assert_eq!(r.u2_bounds.lower, 2);

    let r = analyze(&goeritz_unknot(), &AnalyzeOptions::default()).unwrap();
    assert_eq!(r.theorem.verdict, TheoremVerdict::Vacuous);
    assert!(!r.lickorish.is_obstructed());
    assert_eq!((r.u2_bounds.lower, r.u2_bounds.upper), (0, None));

    let r =
        analyze(&goeritz_from_matrix(&IntSymMatrix::diagonal(&[3, 3])).unwrap(), &AnalyzeOptions::default()).unwrap();
    assert_eq!(r.theorem.reason, Some(TheoremReason::NoncyclicGroup));
    assert!(r.mq_table.is_none());
    assert!(r.lickorish.is_obstructed());
}

#[test]
fn analyze_respects_radius_limit() {
    let opts = AnalyzeOptions { max_radius: Some(BigInt::from(8)), ..Default::default() };
    let err = analyze(&goeritz_from_pretzel(13, 4, 11).unwrap(), &opts).unwrap_err();
    assert_eq!(err.name(), "EnumerationLimit");
}

#[test]
fn report_json_round_trip() {
    let opts = AnalyzeOptions { bounds: ExternalBounds { gamma: Some(1), ..Default::default() }, ..Default::default() };
    let r = analyze(&goeritz_from_pretzel(1, 1, 1).unwrap(), &opts).unwrap();
    let s = serde_json::to_string_pretty(&r).unwrap();
    let back: ObstructionReport = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
    assert_eq!(serde_json::to_string_pretty(&back).unwrap(), s);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["input"], serde_json::json!({"pretzel": [1, 1, 1]}));
    assert_eq!(v["theorem"]["verdict"], "not_obstructed");
    assert_eq!(v["lickorish"]["lambda"], "2/3");
}
