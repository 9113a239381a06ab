//! Catalog and evaluation of bivariate symmetric homogeneous means.
//!
//! Every quotient-form mean (L, P, T, NS and the S_f family) is evaluated
//! through its Seiffert function: with z = |x-y|/(x+y), the value is
//! |x-y| / (2 m(z)). Below z = 1e-8 the arithmetic mean is returned; the
//! sandwich z/(1+z) <= m(z) <= z/(1-z) bounds the relative error by z.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::special::artanh;

/// Relative off-diagonal distance below which evaluators switch to (x+y)/2.
pub const DIAGONAL_Z: f64 = 1e-8;

/// Treat |r| below this as the geometric case of the power mean.
const POWER_MEAN_R_EPS: f64 = 1e-12;

/// How a catalog mean is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeanKind {
    DirectFormula,
    SeiffertGenerated,
}

/// Identifier of a catalog mean, including the parametric power-mean family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanId {
    Arithmetic,
    Geometric,
    Logarithmic,
    SeiffertP,
    SeiffertT,
    NeumanSandor,
    Quadratic,
    Heronian,
    Sin,
    Sinh,
    Tan,
    Tanh,
    Power(f64),
}

impl MeanId {
    pub fn label(&self) -> String {
        match self {
            MeanId::Arithmetic => "A".into(),
            MeanId::Geometric => "G".into(),
            MeanId::Logarithmic => "L".into(),
            MeanId::SeiffertP => "P".into(),
            MeanId::SeiffertT => "T".into(),
            MeanId::NeumanSandor => "NS".into(),
            MeanId::Quadratic => "Q".into(),
            MeanId::Heronian => "He".into(),
            MeanId::Sin => "Ssin".into(),
            MeanId::Sinh => "Ssinh".into(),
            MeanId::Tan => "Stan".into(),
            MeanId::Tanh => "Stanh".into(),
            MeanId::Power(r) => format!("Ar({r})"),
        }
    }
}

impl fmt::Display for MeanId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for MeanId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "A" => MeanId::Arithmetic,
            "G" => MeanId::Geometric,
            "L" => MeanId::Logarithmic,
            "P" => MeanId::SeiffertP,
            "T" => MeanId::SeiffertT,
            "NS" => MeanId::NeumanSandor,
            "Q" => MeanId::Quadratic,
            "He" => MeanId::Heronian,
            "Ssin" => MeanId::Sin,
            "Ssinh" => MeanId::Sinh,
            "Stan" => MeanId::Tan,
            "Stanh" => MeanId::Tanh,
            _ => {
                let inner = s
                    .strip_prefix("Ar(")
                    .and_then(|rest| rest.strip_suffix(')'))
                    .ok_or_else(|| Error::UnknownMean(s.to_string()))?;
                let r: f64 = inner
                    .trim()
                    .parse()
                    .map_err(|_| Error::UnknownMean(s.to_string()))?;
                if !r.is_finite() {
                    return Err(Error::Domain(format!("power mean order must be finite, got {r}")));
                }
                MeanId::Power(r)
            }
        };
        Ok(id)
    }
}

/// A named bivariate mean with its evaluator.
#[derive(Clone)]
pub struct MeanDescriptor {
    pub id: String,
    pub display_name: String,
    pub kind: MeanKind,
    evaluator: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for MeanDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MeanDescriptor")
            .field("id", &self.id)
            .field("display_name", &self.display_name)
            .field("kind", &self.kind)
            .finish()
    }
}

impl MeanDescriptor {
    pub fn new(
        id: impl Into<String>,
        display_name: impl Into<String>,
        kind: MeanKind,
        evaluator: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    ) -> Self {
        Self { id: id.into(), display_name: display_name.into(), kind, evaluator }
    }

    /// Evaluate at positive arguments.
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        check_positive(x, y)?;
        Ok((self.evaluator)(x, y))
    }

    /// Evaluate without the domain check; callers guarantee x, y > 0.
    pub fn eval_unchecked(&self, x: f64, y: f64) -> f64 {
        (self.evaluator)(x, y)
    }
}

fn check_positive(x: f64, y: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite() && y > 0.0 && y.is_finite()) {
        return Err(Error::Domain(format!("mean arguments must be positive and finite, got ({x}, {y})")));
    }
    Ok(())
}

/// |x-y| / (2 m(z)) with the diagonal guard.
fn seiffert_form(x: f64, y: f64, m: impl Fn(f64) -> f64) -> f64 {
    let s = x + y;
    let d = (x - y).abs();
    let z = d / s;
    if z < DIAGONAL_Z {
        0.5 * s
    } else {
        d / (2.0 * m(z))
    }
}

fn eval_by_id(id: &MeanId, x: f64, y: f64) -> f64 {
    match id {
        MeanId::Arithmetic => 0.5 * (x + y),
        MeanId::Geometric => {
            if x == y {
                x
            } else {
                (x * y).sqrt()
            }
        }
        MeanId::Quadratic => {
            if x == y {
                x
            } else {
                (0.5 * (x * x + y * y)).sqrt()
            }
        }
        MeanId::Heronian => {
            if x == y {
                x
            } else {
                // grouped so the result is bit-identical under argument swap
                ((x + y) + (x * y).sqrt()) / 3.0
            }
        }
        MeanId::Logarithmic => seiffert_form(x, y, artanh),
        MeanId::SeiffertP => seiffert_form(x, y, f64::asin),
        MeanId::SeiffertT => seiffert_form(x, y, f64::atan),
        MeanId::NeumanSandor => seiffert_form(x, y, f64::asinh),
        MeanId::Sin => seiffert_form(x, y, f64::sin),
        MeanId::Sinh => seiffert_form(x, y, f64::sinh),
        MeanId::Tan => seiffert_form(x, y, f64::tan),
        MeanId::Tanh => seiffert_form(x, y, f64::tanh),
        MeanId::Power(r) => power_mean_unchecked(*r, x, y),
    }
}

fn power_mean_unchecked(r: f64, x: f64, y: f64) -> f64 {
    if x == y {
        return x;
    }
    if r.abs() < POWER_MEAN_R_EPS {
        return (x * y).sqrt();
    }
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    // Factor out the argument whose r-th power dominates, so the
    // remaining ratio power lies in (0, 1].
    if r > 0.0 {
        hi * (0.5 * ((lo / hi).powf(r) + 1.0)).powf(1.0 / r)
    } else {
        lo * (0.5 * ((hi / lo).powf(r) + 1.0)).powf(1.0 / r)
    }
}

/// Power mean A_r; geometric mean at r = 0.
pub fn power_mean(r: f64, x: f64, y: f64) -> Result<f64> {
    if !r.is_finite() {
        return Err(Error::Domain(format!("power mean order must be finite, got {r}")));
    }
    check_positive(x, y)?;
    Ok(power_mean_unchecked(r, x, y))
}

/// Heronian mean (x + sqrt(xy) + y)/3.
pub fn heronian(x: f64, y: f64) -> Result<f64> {
    check_positive(x, y)?;
    Ok(eval_by_id(&MeanId::Heronian, x, y))
}

/// Descriptor for an identifier, including parsed parametric power means.
pub fn descriptor(id: &MeanId) -> MeanDescriptor {
    let (display, kind) = match id {
        MeanId::Arithmetic => ("arithmetic mean", MeanKind::DirectFormula),
        MeanId::Geometric => ("geometric mean", MeanKind::DirectFormula),
        MeanId::Logarithmic => ("logarithmic mean", MeanKind::SeiffertGenerated),
        MeanId::SeiffertP => ("first Seiffert mean", MeanKind::SeiffertGenerated),
        MeanId::SeiffertT => ("second Seiffert mean", MeanKind::SeiffertGenerated),
        MeanId::NeumanSandor => ("Neuman-Sandor mean", MeanKind::SeiffertGenerated),
        MeanId::Quadratic => ("quadratic mean", MeanKind::DirectFormula),
        MeanId::Heronian => ("Heronian mean", MeanKind::DirectFormula),
        MeanId::Sin => ("sine mean", MeanKind::SeiffertGenerated),
        MeanId::Sinh => ("hyperbolic sine mean", MeanKind::SeiffertGenerated),
        MeanId::Tan => ("tangent mean", MeanKind::SeiffertGenerated),
        MeanId::Tanh => ("hyperbolic tangent mean", MeanKind::SeiffertGenerated),
        MeanId::Power(_) => ("power mean", MeanKind::DirectFormula),
    };
    let display_name = match id {
        MeanId::Power(r) => format!("power mean of order {r}"),
        _ => display.to_string(),
    };
    let key = *id;
    MeanDescriptor::new(id.label(), display_name, kind, Arc::new(move |x, y| eval_by_id(&key, x, y)))
}

/// Look up a descriptor by its textual identifier.
pub fn lookup(id: &str) -> Result<MeanDescriptor> {
    let parsed: MeanId = id.parse()?;
    Ok(descriptor(&parsed))
}

/// Evaluate a mean by identifier at positive arguments.
pub fn eval_mean(id: &str, x: f64, y: f64) -> Result<f64> {
    lookup(id)?.eval(x, y)
}

static CATALOG: OnceLock<Vec<MeanDescriptor>> = OnceLock::new();

/// The thirteen catalog means in a fixed order. The power-mean family is
/// represented by its order-1/2 member; other orders are available through
/// the `Ar(r)` identifier syntax.
pub fn list_means() -> &'static [MeanDescriptor] {
    CATALOG.get_or_init(|| {
        [
            MeanId::Arithmetic,
            MeanId::Geometric,
            MeanId::Logarithmic,
            MeanId::SeiffertP,
            MeanId::SeiffertT,
            MeanId::NeumanSandor,
            MeanId::Quadratic,
            MeanId::Heronian,
            MeanId::Power(0.5),
            MeanId::Sin,
            MeanId::Sinh,
            MeanId::Tan,
            MeanId::Tanh,
        ]
        .iter()
        .map(descriptor)
        .collect()
    })
}
