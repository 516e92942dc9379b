use crate::error::{Error, Result};
use crate::exec::{self, Execution};

use super::{build_approximants, ApproxSystem};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AuditVerdict {
    Satisfied,
    Violated,
    /// `V_i` unbounded or `U` unbounded.
    NotCheckable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditEntry {
    pub index: usize,
    pub verdict: AuditVerdict,
    /// `max |g_{i+1}^[n](x) − c_i|` over the boundary samples.
    pub max_distance: f64,
    pub radius: f64,
    /// `radius − max_distance`; negative when violated.
    pub margin: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub n: usize,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn all_satisfied(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == AuditVerdict::Satisfied)
    }

    pub fn violated(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| e.verdict == AuditVerdict::Violated)
    }
}

/// Checks `g_{i+1}^[n](U) ⊂ V_i` for `i < n` by sampling the boundary of
/// `U`; by the maximum-modulus principle the boundary carries the largest
/// distance from `c_i`.
pub fn properness_audit(sys: &ApproxSystem, n: usize, samples: usize, execution: Execution) -> Result<AuditReport> {
    let codomain = sys
        .codomains
        .as_ref()
        .ok_or_else(|| Error::Configuration("properness audit needs codomains V_i".into()))?;
    if samples == 0 {
        return Err(Error::Parameter("need at least one boundary sample".into()));
    }
    let table = build_approximants(sys, n)?;
    let boundary = if sys.domain.is_bounded() { sys.domain.boundary(samples) } else { Vec::new() };
    let entries = exec::map_range(execution, n, |i| {
        let v = codomain(i).filter(|v| v.is_bounded());
        match v {
            Some(v) if !boundary.is_empty() => {
                let row = table.rows[i + 1].to_float();
                let max_distance = boundary.iter().map(|&x| (row.eval(&x) - v.center).norm()).fold(0.0, f64::max);
                let margin = v.radius - max_distance;
                let verdict = if margin >= 0.0 { AuditVerdict::Satisfied } else { AuditVerdict::Violated };
                AuditEntry { index: i, verdict, max_distance, radius: v.radius, margin }
            }
            _ => AuditEntry {
                index: i,
                verdict: AuditVerdict::NotCheckable,
                max_distance: f64::NAN,
                radius: v.map_or(f64::INFINITY, |v| v.radius),
                margin: f64::NAN,
            },
        }
    });
    Ok(AuditReport { n, entries })
}
