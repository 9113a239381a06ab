//! Explicit Taylor coefficient formulas behind two of the inequality
//! proofs, the cosh polynomial bound, and partial-sum cross-checks of the
//! series against the functions they expand.

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::report::CheckReport;
use crate::special::{artanh, coshm1};

/// The true expansion of the log-mean target carries an overall factor 3
/// relative to the tabulated c_n; partial-sum comparisons apply it.
pub const LOG_SERIES_SCALE: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesFamily {
    /// Expansion of s^4 + s^3 - s - 1 - 3(s^2+1)s log s in powers of (1-s),
    /// starting at n = 5. The target equals 3 times the series built from
    /// the tabulated coefficients; the shared factor does not affect the
    /// term-wise sign certificate.
    LogMeanSeries,
    /// Odd-power expansion of (1/2) sin 2z - (1-z^2) artanh z; term n
    /// multiplies z^(2n+1), starting at n = 1.
    ArtanhTanSeries,
}

/// Coefficients c_{n_min}..c_{n_max} of one of the two certified series.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CoefficientSequence {
    pub family: SeriesFamily,
    pub n_min: u32,
    pub values: Vec<f64>,
}

impl CoefficientSequence {
    pub fn coeff(&self, n: u32) -> Option<f64> {
        n.checked_sub(self.n_min).and_then(|k| self.values.get(k as usize)).copied()
    }
}

/// c_n = -(n^2 - 5n + 12) / (n(n-1)(n-2)(n-3)) for n >= 5.
pub fn log_series_coeff(n: u32) -> f64 {
    let n = n as f64;
    -(n * n - 5.0 * n + 12.0) / (n * (n - 1.0) * (n - 2.0) * (n - 3.0))
}

pub fn log_series_coeffs(n_max: u32) -> Result<CoefficientSequence> {
    if n_max < 5 {
        return Err(Error::Domain(format!("log-mean series starts at n = 5, got n_max = {n_max}")));
    }
    Ok(CoefficientSequence {
        family: SeriesFamily::LogMeanSeries,
        n_min: 5,
        values: (5..=n_max).map(log_series_coeff).collect(),
    })
}

/// a_n = [2 + (-1)^n 4^n (2n-1) / (2n)!] / ((2n+1)(2n-1)) for n >= 1.
///
/// The 4^n/(2n)! factor is accumulated iteratively; past n ~ 85 it
/// underflows to zero and the bracket settles at 2.
pub fn artanh_tan_coeffs(n_max: u32) -> Result<CoefficientSequence> {
    if n_max < 1 {
        return Err(Error::Domain(format!("artanh-tan series starts at n = 1, got n_max = {n_max}")));
    }
    let mut values = Vec::with_capacity(n_max as usize);
    // p_n = 4^n / (2n)!, p_1 = 2
    let mut p = 2.0f64;
    for n in 1..=n_max {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let bracket = 2.0 + sign * p * (2.0 * nf - 1.0);
        values.push(bracket / ((2.0 * nf + 1.0) * (2.0 * nf - 1.0)));
        p *= 4.0 / ((2.0 * nf + 2.0) * (2.0 * nf + 1.0));
    }
    Ok(CoefficientSequence { family: SeriesFamily::ArtanhTanSeries, n_min: 1, values })
}

/// Target of the log-mean series: s^4 + s^3 - s - 1 - 3(s^2+1)s log s.
pub fn log_mean_target(s: f64) -> f64 {
    s.powi(4) + s.powi(3) - s - 1.0 - 3.0 * (s * s + 1.0) * s * s.ln()
}

/// Target of the artanh-tan series: (1/2) sin 2z - (1-z^2) artanh z.
pub fn artanh_tan_target(z: f64) -> f64 {
    0.5 * (2.0 * z).sin() - (1.0 - z * z) * artanh(z)
}

/// Sum of the first `n_terms` terms of the log-mean series at s.
pub fn log_series_partial(s: f64, n_terms: u32) -> f64 {
    let u = 1.0 - s;
    let mut sum = 0.0;
    let mut power = u.powi(5);
    for n in 5..5 + n_terms {
        sum += log_series_coeff(n) * power;
        power *= u;
    }
    sum
}

/// Sum of the first `n_terms` terms of the artanh-tan series at z.
pub fn artanh_tan_partial(z: f64, n_terms: u32) -> f64 {
    if n_terms == 0 {
        return 0.0;
    }
    let coeffs = artanh_tan_coeffs(n_terms).expect("n_terms >= 1");
    let z2 = z * z;
    let mut sum = 0.0;
    let mut power = z2 * z; // z^3
    for a in coeffs.values {
        sum += a * power;
        power *= z2;
    }
    sum
}

/// cosh z < 1 + z^2/2 + z^4/12 on a grid inside (0,1). The left side is
/// evaluated as cosh z - 1 to keep the tiny margin near z = 0 meaningful.
pub fn cosh_bound_check(grid: &Grid1D) -> Result<CheckReport> {
    if !(grid.min > 0.0 && grid.max < 1.0) {
        return Err(Error::Grid("cosh bound grid must lie in (0,1)".into()));
    }
    let samples: Vec<([f64; 2], f64)> = grid
        .points()
        .iter()
        .map(|&z| {
            let z2 = z * z;
            let margin = z2 / 2.0 + z2 * z2 / 12.0 - coshm1(z);
            ([z, margin], margin)
        })
        .collect();
    let mut report = CheckReport::from_margins("cosh z < 1 + z^2/2 + z^4/12", &samples, 0.0);
    if report.worst_margin <= 0.0 {
        report.verdict = crate::report::Verdict::Fail;
    }
    Ok(report)
}

/// Compare a truncated series against its target function on a grid inside
/// the convergence-safe region. The allowed discrepancy at each point is
/// max(1e-10, 2 |first omitted term|).
pub fn partial_sum_vs_function(
    family: SeriesFamily,
    n_terms: u32,
    grid: &Grid1D,
) -> Result<CheckReport> {
    let samples: Vec<([f64; 2], f64)> = match family {
        SeriesFamily::LogMeanSeries => {
            if !(grid.min >= 0.5 && grid.max <= 1.5) {
                return Err(Error::Grid("log-mean series grid must satisfy |1 - s| <= 0.5".into()));
            }
            grid.points()
                .iter()
                .map(|&s| {
                    let err =
                        (LOG_SERIES_SCALE * log_series_partial(s, n_terms) - log_mean_target(s)).abs();
                    let omitted = LOG_SERIES_SCALE
                        * log_series_coeff(5 + n_terms).abs()
                        * (1.0 - s).abs().powi(5 + n_terms as i32);
                    ([s, err], (1e-10f64).max(2.0 * omitted) - err)
                })
                .collect()
        }
        SeriesFamily::ArtanhTanSeries => {
            if !(grid.min > 0.0 && grid.max <= 0.5) {
                return Err(Error::Grid("artanh-tan series grid must satisfy 0 < z <= 0.5".into()));
            }
            let next = artanh_tan_coeffs(n_terms + 1)
                .expect("n_terms + 1 >= 1")
                .coeff(n_terms + 1)
                .unwrap();
            grid.points()
                .iter()
                .map(|&z| {
                    let err = (artanh_tan_partial(z, n_terms) - artanh_tan_target(z)).abs();
                    let omitted = next.abs() * z.powi(2 * n_terms as i32 + 3);
                    ([z, err], (1e-10f64).max(2.0 * omitted) - err)
                })
                .collect()
        }
    };
    Ok(CheckReport::from_margins(
        format!("partial sum ({family:?}, {n_terms} terms) vs target"),
        &samples,
        0.0,
    ))
}
