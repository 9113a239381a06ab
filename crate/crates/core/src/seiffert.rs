//! Both directions of the mean <-> Seiffert function correspondence.
//!
//! A Seiffert function is any m on (0,1) with z/(1+z) <= m(z) <= z/(1-z).
//! The bridge is M(x,y) = |x-y| / (2 m(|x-y|/(x+y))) and, back again,
//! m(z) = z / M(1+z, 1-z).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grid::{Grid1D, GridSpec};
use crate::means::{self, MeanDescriptor, MeanId, MeanKind, DIAGONAL_Z};
use crate::report::{CheckReport, DEFAULT_TOL};
use crate::special::artanh;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeiffertOrigin {
    Builtin,
    ExtractedFromMean,
}

/// A named candidate Seiffert function on (0,1).
#[derive(Clone)]
pub struct SeiffertDescriptor {
    pub id: String,
    pub origin: SeiffertOrigin,
    evaluator: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for SeiffertDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeiffertDescriptor")
            .field("id", &self.id)
            .field("origin", &self.origin)
            .finish()
    }
}

impl SeiffertDescriptor {
    pub fn new(
        id: impl Into<String>,
        origin: SeiffertOrigin,
        evaluator: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    ) -> Self {
        Self { id: id.into(), origin, evaluator }
    }

    pub fn eval(&self, z: f64) -> Result<f64> {
        if !(z > 0.0 && z < 1.0) {
            return Err(Error::Domain(format!("Seiffert argument must lie in (0,1), got {z}")));
        }
        Ok((self.evaluator)(z))
    }

    pub fn eval_unchecked(&self, z: f64) -> f64 {
        (self.evaluator)(z)
    }
}

/// Builtin Seiffert function by identifier; `a(r)` is the Seiffert
/// function of the power mean of order r.
pub fn builtin(id: &str) -> Result<SeiffertDescriptor> {
    let eval: Arc<dyn Fn(f64) -> f64 + Send + Sync> = match id {
        "id" => Arc::new(|z| z),
        "sin" => Arc::new(f64::sin),
        "sinh" => Arc::new(f64::sinh),
        "tan" => Arc::new(f64::tan),
        "tanh" => Arc::new(f64::tanh),
        "arcsin" => Arc::new(f64::asin),
        "arctan" => Arc::new(f64::atan),
        "arsinh" => Arc::new(f64::asinh),
        "artanh" => Arc::new(artanh),
        "q" => Arc::new(|z| z / (1.0 + z * z).sqrt()),
        _ => {
            let inner = id
                .strip_prefix("a(")
                .and_then(|rest| rest.strip_suffix(')'))
                .ok_or_else(|| Error::UnknownSeiffert(id.to_string()))?;
            let r: f64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::UnknownSeiffert(id.to_string()))?;
            if !r.is_finite() {
                return Err(Error::Domain(format!("power mean order must be finite, got {r}")));
            }
            let m = means::descriptor(&MeanId::Power(r));
            Arc::new(move |z| z / m.eval_unchecked(1.0 + z, 1.0 - z))
        }
    };
    Ok(SeiffertDescriptor::new(id, SeiffertOrigin::Builtin, eval))
}

/// All builtin Seiffert functions, with the power-mean family represented
/// by its order-1/2 member.
pub fn list_builtins() -> Vec<SeiffertDescriptor> {
    ["id", "sin", "sinh", "tan", "tanh", "arcsin", "arctan", "arsinh", "artanh", "q", "a(0.5)"]
        .iter()
        .map(|id| builtin(id).expect("builtin ids parse"))
        .collect()
}

/// Seiffert function of a symmetric homogeneous mean: z -> z / M(1+z, 1-z).
pub fn mean_to_seiffert(mean: &MeanDescriptor) -> SeiffertDescriptor {
    let m = mean.clone();
    SeiffertDescriptor::new(
        format!("m[{}]", mean.id),
        SeiffertOrigin::ExtractedFromMean,
        Arc::new(move |z| z / m.eval_unchecked(1.0 + z, 1.0 - z)),
    )
}

/// Mean generated by a Seiffert function: M(x,y) = |x-y| / (2 m(z)).
pub fn seiffert_to_mean(m: &SeiffertDescriptor) -> MeanDescriptor {
    let f = m.clone();
    MeanDescriptor::new(
        format!("M[{}]", m.id),
        format!("mean generated by {}", m.id),
        MeanKind::SeiffertGenerated,
        Arc::new(move |x: f64, y: f64| {
            let s = x + y;
            let d = (x - y).abs();
            let z = d / s;
            if z < DIAGONAL_Z {
                0.5 * s
            } else {
                d / (2.0 * f.eval_unchecked(z))
            }
        }),
    )
}

/// Check the sandwich z/(1+z) - tol <= m(z) <= z/(1-z) + tol on a grid.
/// The tolerance is absolute: both bounds vanish linearly at z = 0.
pub fn validate_seiffert(m: &SeiffertDescriptor, grid: &Grid1D, tol: f64) -> CheckReport {
    let samples: Vec<([f64; 2], f64)> = grid
        .points()
        .iter()
        .map(|&z| {
            let v = m.eval_unchecked(z);
            let lower = v - z / (1.0 + z);
            let upper = z / (1.0 - z) - v;
            ([z, v], lower.min(upper))
        })
        .collect();
    CheckReport::from_margins(format!("seiffert-sandwich[{}]", m.id), &samples, tol)
}

/// Verify mean -> Seiffert -> mean reproduces the mean to relative
/// tolerance `rel_tol` on the grid. Margins are -relative error, so the
/// report passes iff every error stays within tolerance.
pub fn roundtrip_check(mean: &MeanDescriptor, grid: &GridSpec, rel_tol: f64) -> CheckReport {
    let regenerated = seiffert_to_mean(&mean_to_seiffert(mean));
    let samples: Vec<([f64; 2], f64)> = grid
        .points()
        .iter()
        .map(|&[x, y]| {
            let direct = mean.eval_unchecked(x, y);
            let via = regenerated.eval_unchecked(x, y);
            ([x, y], -((via - direct).abs() / direct))
        })
        .collect();
    CheckReport::from_margins(format!("roundtrip[{}]", mean.id), &samples, rel_tol)
}

/// Convenience: roundtrip at the spec tolerance 1e-12.
pub fn roundtrip_check_default(mean: &MeanDescriptor, grid: &GridSpec) -> CheckReport {
    roundtrip_check(mean, grid, DEFAULT_TOL)
}
