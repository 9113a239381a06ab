//! Check outcomes.

use serde::Serialize;

/// Non-strict tolerance applied to all inequality margins.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail => f.write_str("fail"),
            Verdict::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

/// Outcome of a monotonicity or inequality check.
///
/// `worst_margin` is the minimum observed margin (checks are written so
/// that a nonnegative margin means the claim holds at that sample). On
/// failure `worst_point` holds the first violating sample in evaluation
/// order.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub relation: String,
    pub verdict: Verdict,
    pub worst_margin: f64,
    pub worst_point: Option<[f64; 2]>,
    pub samples: usize,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Build a report from ordered (point, margin) samples: fail iff some
    /// margin drops below -tol, worst point = first such sample.
    pub fn from_margins(relation: impl Into<String>, samples: &[([f64; 2], f64)], tol: f64) -> Self {
        let mut worst_margin = f64::INFINITY;
        let mut first_violation = None;
        for &(p, m) in samples {
            if m < worst_margin {
                worst_margin = m;
            }
            if m < -tol && first_violation.is_none() {
                first_violation = Some(p);
            }
        }
        let verdict = if samples.is_empty() {
            Verdict::Inconclusive
        } else if first_violation.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        CheckReport {
            relation: relation.into(),
            verdict,
            worst_margin: if samples.is_empty() { f64::NAN } else { worst_margin },
            worst_point: first_violation,
            samples: samples.len(),
        }
    }
}
