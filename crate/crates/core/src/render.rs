//! Human-readable and CSV renderings of reports, and pretzel batch scans.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::Provenance;
use crate::job::{run_job, JobInput, JobOptions, JobSpec};
use crate::obstruction::{ObstructionReport, TrialOutcome};
use crate::{Error, Result};

/// Short label for the report's input.
pub fn input_id(input: &Provenance) -> String {
    match input {
        Provenance::Pretzel([p, q, r]) => format!("pretzel({p},{q},{r})"),
        Provenance::Matrix(m) => format!("matrix{m}"),
        Provenance::Pd(code) => format!("pd[{code}]"),
        Provenance::Unknot => "unknot".to_string(),
    }
}

fn vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn verdict_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|j| j.as_str().map(str::to_string)).unwrap_or_default()
}

pub fn render_text(r: &ObstructionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {}", input_id(&r.input));
    let _ = writeln!(out, "Goeritz matrix: {}{}", r.matrix, if r.mirrored { " (negated: mirror image)" } else { "" });
    let group = if r.invariant_factors.is_empty() {
        "trivial".to_string()
    } else {
        r.invariant_factors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")
    };
    let _ = writeln!(out, "determinant: {}  group: {}", r.p, group);
    if let Some(g) = &r.generator {
        let _ = writeln!(out, "generator g0: {}", vector(g));
    }
    if let Some(t) = &r.mq_table {
        let _ = writeln!(out, "M_Q certified at radius {}:", t.certified_radius);
        for (i, (v, w)) in t.values.iter().zip(&t.witnesses).enumerate().take(12) {
            let _ = writeln!(out, "  M_Q({i}) = {v}  witness {}", vector(w));
        }
        if t.values.len() > 12 {
            let _ = writeln!(out, "  ... {} classes in total", t.values.len());
        }
    }

    let th = &r.theorem;
    let reason = th.reason.map(|x| format!(" ({})", verdict_name(&x))).unwrap_or_default();
    let _ = writeln!(out, "theorem: {}{}", verdict_name(&th.verdict), reason);
    if let Some((e, a)) = th.witness {
        let _ = writeln!(out, "  witness: epsilon = {e:+}, a = {a}");
    }
    // ε = +1 first, then by failing index and kind
    let mut by_kind: BTreeMap<(bool, u64, String), BTreeMap<String, Vec<u64>>> = BTreeMap::new();
    for t in &th.trials {
        if let TrialOutcome::Fail { i, kind, value } = &t.outcome {
            by_kind
                .entry((t.epsilon < 0, *i, verdict_name(kind)))
                .or_default()
                .entry(value.to_string())
                .or_default()
                .push(t.a);
        }
    }
    for ((neg, i, kind), entries) in &by_kind {
        let e = if *neg { "-1" } else { "+1" };
        let count: usize = entries.values().map(Vec::len).sum();
        if count <= 4 || entries.len() == 1 {
            for (value, units) in entries {
                let shown: Vec<String> = units.iter().take(6).map(|a| a.to_string()).collect();
                let more = if units.len() > 6 { ", ..." } else { "" };
                let _ = writeln!(
                    out,
                    "  epsilon = {e}: {} unit(s) fail at i = {i} ({kind}), I = {value}; a = {}{more}",
                    units.len(),
                    shown.join(", ")
                );
            }
        } else {
            let _ = writeln!(out, "  epsilon = {e}: {count} unit(s) fail at i = {i} ({kind})");
        }
    }

    let l = &r.lickorish;
    let _ = write!(out, "lickorish: {}", verdict_name(&l.verdict));
    if !l.cyclic {
        let _ = write!(out, " (group not cyclic)");
    }
    let _ = writeln!(out);
    if let Some(lambda) = &l.lambda {
        let _ = write!(out, "  lambda(g0,g0) = {lambda}");
        match (l.x, &l.lambda_at_x) {
            (Some(x), Some(lx)) => {
                let _ = writeln!(out, "; x = {x} gives lambda(x g0, x g0) = {lx}");
            }
            _ => {
                let _ = writeln!(out, "; no x with lambda(x g0, x g0) = +-1/{}", r.p);
            }
        }
    }

    let b = &r.u2_bounds;
    let _ = writeln!(out, "{}", bounds_line(b.lower, b.upper, b.exact));
    out
}

fn bounds_line(lower: u64, upper: Option<u64>, exact: Option<u64>) -> String {
    match (exact, upper) {
        (Some(e), _) => format!("u2 = {e}"),
        (None, Some(u)) => format!("u2 in [{lower}, {u}]"),
        (None, None) => format!("u2 >= {lower}"),
    }
}

/// Compact row for a single analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub id: String,
    pub p: String,
    pub theorem: String,
    pub lickorish: String,
    pub lower: u64,
    pub upper: Option<u64>,
}

impl From<&ObstructionReport> for ReportRow {
    fn from(r: &ObstructionReport) -> Self {
        ReportRow {
            id: input_id(&r.input),
            p: r.p.to_string(),
            theorem: verdict_name(&r.theorem.verdict),
            lickorish: verdict_name(&r.lickorish.verdict),
            lower: r.u2_bounds.lower,
            upper: r.u2_bounds.upper,
        }
    }
}

pub fn render_csv(r: &ObstructionReport) -> Result<String> {
    write_csv(std::iter::once(ReportRow::from(r)))
}

/// One row of a pretzel scan; skipped triples carry only `skip_reason`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub det: Option<String>,
    pub theorem: Option<String>,
    pub lickorish: Option<String>,
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub skip_reason: Option<String>,
}

/// Inclusive range `(lo, hi)` per pretzel parameter.
pub type PretzelRanges = [(u64, u64); 3];

/// Analyzes every triple in the ranges, in lexicographic order.
///
/// Triples that are not knots are reported with their error name; errors
/// that signal a broken invariant abort the scan.
pub fn scan_pretzels(ranges: &PretzelRanges, options: &JobOptions) -> Result<Vec<ScanRow>> {
    for &(lo, hi) in ranges {
        if lo > hi {
            return Err(Error::InvalidJob(format!("empty range {lo},{hi}")));
        }
    }
    let triples: Vec<[u64; 3]> = (ranges[0].0..=ranges[0].1)
        .flat_map(|p| {
            (ranges[1].0..=ranges[1].1).flat_map(move |q| (ranges[2].0..=ranges[2].1).map(move |r| [p, q, r]))
        })
        .collect();
    triples
        .par_iter()
        .map(|&t| {
            let spec = JobSpec { input: JobInput::Pretzel(t), options: options.clone() };
            let [p, q, r] = t;
            match run_job(&spec) {
                Ok(rep) => Ok(ScanRow {
                    p,
                    q,
                    r,
                    det: Some(rep.p.to_string()),
                    theorem: Some(verdict_name(&rep.theorem.verdict)),
                    lickorish: Some(verdict_name(&rep.lickorish.verdict)),
                    lower: Some(rep.u2_bounds.lower),
                    upper: rep.u2_bounds.upper,
                    skip_reason: None,
                }),
                Err(e) if e.is_internal() => Err(e),
                Err(e) => Ok(ScanRow {
                    p,
                    q,
                    r,
                    det: None,
                    theorem: None,
                    lickorish: None,
                    lower: None,
                    upper: None,
                    skip_reason: Some(e.name().to_string()),
                }),
            }
        })
        .collect()
}

pub fn write_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}
