//! Job descriptions shared by the command line and the C interface.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::diagram::{
    goeritz_from_matrix, goeritz_from_pd, goeritz_from_pretzel, goeritz_unknot, parse_pd, GoeritzResult,
};
use crate::exactmat::IntSymMatrix;
use crate::obstruction::{analyze, AnalyzeOptions, ExternalBounds, ObstructionReport};
use crate::quadform::{certified_box_radius, group_of, mq_bruteforce, mq_table_bounded, MqTable};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JobInput {
    Pd(String),
    Pretzel([u64; 3]),
    Matrix(IntSymMatrix),
    Unknot,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JobOptions {
    pub f0: Option<usize>,
    pub bounds: ExternalBounds,
    pub max_radius: Option<u64>,
    /// Cross-check the `M_Q` table against a naive box scan.
    pub oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub input: JobInput,
    pub options: JobOptions,
}

/// JSON job object: exactly one of `pd`, `pretzel`, `matrix`, `unknot`,
/// plus an optional `f0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobObject {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pretzel: Option<[u64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<IntSymMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unknot: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f0: Option<usize>,
}

impl JobObject {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidJob(e.to_string()))
    }

    /// The input variant and `f0`.
    pub fn into_input(self) -> Result<(JobInput, Option<usize>)> {
        let mut found = Vec::new();
        if let Some(pd) = self.pd {
            found.push(JobInput::Pd(pd));
        }
        if let Some(t) = self.pretzel {
            found.push(JobInput::Pretzel(t));
        }
        if let Some(m) = self.matrix {
            found.push(JobInput::Matrix(m));
        }
        match self.unknot {
            Some(true) => found.push(JobInput::Unknot),
            Some(false) => return Err(Error::InvalidJob("\"unknot\" must be true when present".into())),
            None => {}
        }
        if found.len() != 1 {
            return Err(Error::InvalidJob(format!(
                "expected exactly one of pd, pretzel, matrix, unknot; got {}",
                found.len()
            )));
        }
        Ok((found.pop().expect("one input"), self.f0))
    }
}

/// Goeritz matrix for the job input.
pub fn build_goeritz(input: &JobInput, f0: Option<usize>) -> Result<GoeritzResult> {
    Ok(match input {
        JobInput::Pd(code) => goeritz_from_pd(&parse_pd(code)?, f0)?,
        JobInput::Pretzel([p, q, r]) => goeritz_from_pretzel(*p, *q, *r)?,
        JobInput::Matrix(m) => goeritz_from_matrix(m)?,
        JobInput::Unknot => goeritz_unknot(),
    })
}

/// Full pipeline for one job.
pub fn run_job(spec: &JobSpec) -> Result<ObstructionReport> {
    let g = build_goeritz(&spec.input, spec.options.f0)?;
    let opts =
        AnalyzeOptions { bounds: spec.options.bounds.clone(), max_radius: spec.options.max_radius.map(BigInt::from) };
    let report = analyze(&g, &opts)?;
    if spec.options.oracle {
        if let Some(table) = &report.mq_table {
            cross_check(&g.q, table)?;
        }
    }
    Ok(report)
}

/// `M_Q` table alone.
pub fn run_mq(input: &JobInput, options: &JobOptions) -> Result<MqTable> {
    let g = build_goeritz(input, options.f0)?;
    let group = group_of(&g.q)?;
    let limit = options.max_radius.map(BigInt::from);
    let table = mq_table_bounded(&g.q, &group, limit.as_ref())?;
    if options.oracle {
        cross_check(&g.q, &table)?;
    }
    Ok(table)
}

/// Compares the certified table with a naive scan of the certified box.
pub fn cross_check(q: &IntSymMatrix, table: &MqTable) -> Result<()> {
    let group = group_of(q)?;
    let radius = certified_box_radius(q, table);
    let radius = u64::try_from(radius).map_err(|_| Error::Internal("box radius overflow".into()))?;
    let brute = mq_bruteforce(q, &group, radius)?;
    if brute.len() != table.order() {
        return Err(Error::OracleMismatch(format!("naive scan reached {} of {} classes", brute.len(), table.order())));
    }
    for (i, (value, _)) in &brute {
        let ours = &table.values[*i as usize];
        if ours != value {
            return Err(Error::OracleMismatch(format!("class {i}: table {ours}, naive scan {value}")));
        }
    }
    Ok(())
}
