//! Numerical verification of Ky Fan inequalities and of the sufficient
//! conditions that imply them.
//!
//! Monotonicity verdicts come from pairwise comparison of consecutive
//! sampled values; finite differences are used only by the derivative-sign
//! diagnostic. Grid evaluation runs in parallel, but the reduction that
//! picks the worst margin and the first violation walks the samples in
//! grid order, so reports are deterministic.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{Grid1D, GridSpec};
use crate::means::MeanDescriptor;
use crate::report::{CheckReport, Verdict};
#[cfg(test)]
use crate::report::DEFAULT_TOL;
use crate::seiffert::SeiffertDescriptor;

/// Relation kind for chain verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    Ratio,
    Harmonic,
}

impl std::fmt::Display for RelationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelationKind::Ratio => f.write_str("ratio"),
            RelationKind::Harmonic => f.write_str("harmonic"),
        }
    }
}

/// Ordered list of means checked pairwise under one relation.
#[derive(Debug, Clone)]
pub struct ChainSpec {
    pub mean_ids: Vec<String>,
    pub relation: RelationKind,
    pub grid: GridSpec,
}

/// M(1-x, 1-y), defined for 0 < x, y <= 1/2.
pub fn prime_of(mean: &MeanDescriptor, x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 0.5 && y > 0.0 && y <= 0.5) {
        return Err(Error::Domain(format!("prime arguments must lie in (0, 1/2], got ({x}, {y})")));
    }
    mean.eval(1.0 - x, 1.0 - y)
}

fn grid_margins(
    grid: &GridSpec,
    f: impl Fn(f64, f64) -> f64 + Sync,
) -> Vec<([f64; 2], f64)> {
    grid.points()
        .par_iter()
        .map(|&[x, y]| ([x, y], f(x, y)))
        .collect()
}

/// Ratio Ky Fan: M/M' <= N/N' on a grid inside (0, 1/2]^2.
pub fn check_ratio_kyfan(
    m: &MeanDescriptor,
    n: &MeanDescriptor,
    grid: &GridSpec,
    tol: f64,
) -> Result<CheckReport> {
    grid.validate_kyfan()?;
    let samples = grid_margins(grid, |x, y| {
        let lhs = m.eval_unchecked(x, y) / m.eval_unchecked(1.0 - x, 1.0 - y);
        let rhs = n.eval_unchecked(x, y) / n.eval_unchecked(1.0 - x, 1.0 - y);
        rhs - lhs
    });
    Ok(CheckReport::from_margins(
        format!("ratio-kyfan: {}/{}' <= {}/{}'", m.id, m.id, n.id, n.id),
        &samples,
        tol,
    ))
}

/// Harmonic Ky Fan: 1/M - 1/M' <= 1/N - 1/N'.
pub fn check_harmonic_kyfan(
    m: &MeanDescriptor,
    n: &MeanDescriptor,
    grid: &GridSpec,
    tol: f64,
) -> Result<CheckReport> {
    grid.validate_kyfan()?;
    let samples = grid_margins(grid, |x, y| {
        let lhs = 1.0 / m.eval_unchecked(x, y) - 1.0 / m.eval_unchecked(1.0 - x, 1.0 - y);
        let rhs = 1.0 / n.eval_unchecked(x, y) - 1.0 / n.eval_unchecked(1.0 - x, 1.0 - y);
        rhs - lhs
    });
    Ok(CheckReport::from_margins(
        format!("harmonic-kyfan: 1/{m} - 1/{m}' <= 1/{n} - 1/{n}'", m = m.id, n = n.id),
        &samples,
        tol,
    ))
}

fn pairwise_monotone(
    relation: String,
    points: &[f64],
    values: &[f64],
    tol: f64,
    decreasing: bool,
) -> CheckReport {
    let samples: Vec<([f64; 2], f64)> = points
        .windows(2)
        .zip(values.windows(2))
        .map(|(p, v)| {
            let margin = if decreasing { v[0] - v[1] } else { v[1] - v[0] };
            ([p[0], p[1]], margin)
        })
        .collect();
    CheckReport::from_margins(relation, &samples, tol)
}

/// Hypothesis of the ratio theorem: n/m is non-increasing on (0,1).
pub fn check_ratio_monotone(
    m: &SeiffertDescriptor,
    n: &SeiffertDescriptor,
    grid: &Grid1D,
    tol: f64,
) -> CheckReport {
    let zs = grid.points();
    let values: Vec<f64> = zs
        .par_iter()
        .map(|&z| n.eval_unchecked(z) / m.eval_unchecked(z))
        .collect();
    pairwise_monotone(
        format!("ratio-monotone: {}/{} non-increasing", n.id, m.id),
        &zs,
        &values,
        tol,
        true,
    )
}

/// Equivalent hypothesis form: q(t) = M(1,t)/N(1,t) non-decreasing on (0,1).
pub fn check_q_increasing(
    m: &MeanDescriptor,
    n: &MeanDescriptor,
    grid: &Grid1D,
    tol: f64,
) -> CheckReport {
    let ts = grid.points();
    let values: Vec<f64> = ts
        .par_iter()
        .map(|&t| m.eval_unchecked(1.0, t) / n.eval_unchecked(1.0, t))
        .collect();
    pairwise_monotone(
        format!("q-increasing: {}(1,t)/{}(1,t) non-decreasing", m.id, n.id),
        &ts,
        &values,
        tol,
        false,
    )
}

/// Hypothesis of the harmonic theorem: m - n is non-increasing on (0,1).
pub fn check_diff_decreasing(
    m: &SeiffertDescriptor,
    n: &SeiffertDescriptor,
    grid: &Grid1D,
    tol: f64,
) -> CheckReport {
    let zs = grid.points();
    let values: Vec<f64> = zs
        .par_iter()
        .map(|&z| m.eval_unchecked(z) - n.eval_unchecked(z))
        .collect();
    pairwise_monotone(
        format!("diff-decreasing: {} - {} non-increasing", m.id, n.id),
        &zs,
        &values,
        tol,
        true,
    )
}

/// Equivalent harmonic hypothesis form:
/// g(s) = (s-1)(1/M(s,1) - 1/N(s,1)) non-increasing on (1, s_max].
pub fn check_g_decreasing(
    m: &MeanDescriptor,
    n: &MeanDescriptor,
    grid: &Grid1D,
    tol: f64,
) -> Result<CheckReport> {
    if grid.min <= 1.0 {
        return Err(Error::Grid("g(s) grid must lie in (1, s_max]".into()));
    }
    let ss = grid.points();
    let values: Vec<f64> = ss
        .par_iter()
        .map(|&s| (s - 1.0) * (1.0 / m.eval_unchecked(s, 1.0) - 1.0 / n.eval_unchecked(s, 1.0)))
        .collect();
    Ok(pairwise_monotone(
        format!("g-decreasing: (s-1)(1/{}(s,1) - 1/{}(s,1)) non-increasing", m.id, n.id),
        &ss,
        &values,
        tol,
        true,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// Finite-difference diagnostic: assert the sign of f' at each grid point.
/// Estimates below 1e-9 in magnitude are inconclusive at that point.
pub fn check_derivative_sign(
    f: impl Fn(f64) -> f64 + Sync,
    grid: &Grid1D,
    expected: Sign,
) -> CheckReport {
    const H: f64 = 1e-6;
    const CONCLUSIVE: f64 = 1e-9;
    let sign = match expected {
        Sign::Positive => 1.0,
        Sign::Negative => -1.0,
    };
    let estimates: Vec<(f64, f64)> = grid
        .points()
        .par_iter()
        .map(|&z| (z, sign * (f(z + H) - f(z - H)) / (2.0 * H)))
        .collect();

    let mut worst_margin = f64::INFINITY;
    let mut first_violation = None;
    let mut conclusive = 0usize;
    for &(z, est) in &estimates {
        if est < worst_margin {
            worst_margin = est;
        }
        if est.abs() <= CONCLUSIVE {
            continue;
        }
        conclusive += 1;
        if est < 0.0 && first_violation.is_none() {
            first_violation = Some([z, est]);
        }
    }
    let verdict = if first_violation.is_some() {
        Verdict::Fail
    } else if conclusive > 0 {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    CheckReport {
        relation: format!(
            "derivative-sign: f' {} on [{}, {}]",
            if sign > 0.0 { "> 0" } else { "< 0" },
            grid.min,
            grid.max
        ),
        verdict,
        worst_margin,
        worst_point: first_violation,
        samples: estimates.len(),
    }
}

/// Run the chain's pairwise relation check for each adjacent pair.
pub fn verify_chain(chain: &ChainSpec, tol: f64) -> Result<Vec<CheckReport>> {
    let descriptors: Vec<MeanDescriptor> = chain
        .mean_ids
        .iter()
        .map(|id| crate::means::lookup(id))
        .collect::<Result<_>>()?;
    descriptors
        .windows(2)
        .map(|pair| match chain.relation {
            RelationKind::Ratio => check_ratio_kyfan(&pair[0], &pair[1], &chain.grid, tol),
            RelationKind::Harmonic => check_harmonic_kyfan(&pair[0], &pair[1], &chain.grid, tol),
        })
        .collect()
}

/// The counterexample function from the closing note: increasing on
/// (0, 1/3), then 1/3 + (t - 1/3)(1 - t), which peaks at t = 2/3.
pub fn note_fn(t: f64) -> f64 {
    if t < 1.0 / 3.0 {
        t
    } else {
        1.0 / 3.0 + (t - 1.0 / 3.0) * (1.0 - t)
    }
}

/// Outcome of the note's counterexample demonstration.
#[derive(Debug, Clone, serde::Serialize)]
pub struct NoteCounterexample {
    pub description: String,
    /// f((y-x)/(x+y)) > f((y-x)/(2-x-y)) over a dense grid of 0 < x < y < 1/2.
    pub inequality: CheckReport,
    /// Pass means a non-monotonicity witness t1 < t2 with f(t1) > f(t2) was found.
    pub non_monotonicity: CheckReport,
}

/// Demonstrate that the ratio inequality does not force monotonicity.
pub fn note_counterexample() -> NoteCounterexample {
    // strict inequality over 0 < x < y < 1/2
    let n = 300usize;
    let coords = crate::grid::linspace(1e-3, 0.5 - 1e-3, n);
    let mut samples = Vec::new();
    for (i, &x) in coords.iter().enumerate() {
        for &y in &coords[i + 1..] {
            let u1 = (y - x) / (x + y);
            let u2 = (y - x) / (2.0 - x - y);
            samples.push(([x, y], note_fn(u1) - note_fn(u2)));
        }
    }
    let mut inequality = CheckReport::from_margins(
        "note: f((y-x)/(x+y)) > f((y-x)/(2-x-y)) on 0 < x < y < 1/2",
        &samples,
        0.0,
    );
    // the note's inequality is strict; a zero margin is a violation
    if inequality.worst_margin <= 0.0 {
        inequality.verdict = Verdict::Fail;
    }

    // witness search: first consecutive pair with f decreasing
    let ts = Grid1D::default_unit().points();
    let mut witness = None;
    for w in ts.windows(2) {
        if note_fn(w[0]) > note_fn(w[1]) {
            witness = Some([w[0], w[1]]);
            break;
        }
    }
    let non_monotonicity = match witness {
        Some([t1, t2]) => CheckReport {
            relation: "note: witness t1 < t2 with f(t1) > f(t2)".into(),
            verdict: Verdict::Pass,
            worst_margin: note_fn(t1) - note_fn(t2),
            worst_point: Some([t1, t2]),
            samples: ts.len(),
        },
        None => CheckReport {
            relation: "note: witness t1 < t2 with f(t1) > f(t2)".into(),
            verdict: Verdict::Fail,
            worst_margin: f64::NAN,
            worst_point: None,
            samples: ts.len(),
        },
    };
    NoteCounterexample {
        description: "f(t) = t on (0,1/3), f(t) = 1/3 + (t-1/3)(1-t) on [1/3,1]".into(),
        inequality,
        non_monotonicity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::means::lookup;
    use crate::seiffert::builtin;

    fn unit_grid() -> Grid1D {
        Grid1D::new(1e-3, 1.0 - 1e-3, 1000).unwrap()
    }

    fn small_grid() -> GridSpec {
        GridSpec::new(1e-3, 0.5, 1e-3, 0.5, 60, 60).unwrap()
    }

    #[test]
    fn prime_of_values() {
        let a = lookup("A").unwrap();
        assert_eq!(prime_of(&a, 0.1, 0.4).unwrap(), 0.75);
        let g = lookup("G").unwrap();
        let v = prime_of(&g, 0.1, 0.4).unwrap();
        assert!((v - 0.54f64.sqrt()).abs() <= 1e-15);
        assert_eq!(prime_of(&a, 0.5, 0.5).unwrap(), 0.5);
        assert!(prime_of(&a, 0.6, 0.4).is_err());
    }

    #[test]
    fn classical_kyfan_passes_and_reverse_fails() {
        let g = lookup("G").unwrap();
        let a = lookup("A").unwrap();
        let ok = check_ratio_kyfan(&g, &a, &small_grid(), DEFAULT_TOL).unwrap();
        assert!(ok.passed(), "{ok:?}");
        let rev = check_ratio_kyfan(&a, &g, &small_grid(), DEFAULT_TOL).unwrap();
        assert_eq!(rev.verdict, Verdict::Fail);
        assert!(rev.worst_point.is_some());
    }

    #[test]
    fn ratio_kyfan_instance_value() {
        // at (0.1, 0.4): G/G' < A/A' = 1/3
        let g = lookup("G").unwrap();
        let a = lookup("A").unwrap();
        let gr = g.eval(0.1, 0.4).unwrap() / prime_of(&g, 0.1, 0.4).unwrap();
        let ar = a.eval(0.1, 0.4).unwrap() / prime_of(&a, 0.1, 0.4).unwrap();
        assert!((gr - 0.27217).abs() < 1e-5);
        assert!((ar - 1.0 / 3.0).abs() <= 1e-15);
        assert!(gr < ar);
    }

    #[test]
    fn reflexive_checks_have_zero_margin() {
        let m = lookup("NS").unwrap();
        let r = check_ratio_kyfan(&m, &m, &small_grid(), DEFAULT_TOL).unwrap();
        assert!(r.passed());
        assert_eq!(r.worst_margin, 0.0);
        let h = check_harmonic_kyfan(&m, &m, &small_grid(), DEFAULT_TOL).unwrap();
        assert!(h.passed());
        assert_eq!(h.worst_margin, 0.0);
    }

    #[test]
    fn grid_outside_half_square_is_rejected() {
        let bad = GridSpec::new(0.1, 0.7, 0.1, 0.5, 10, 10).unwrap();
        let a = lookup("A").unwrap();
        assert!(check_ratio_kyfan(&a, &a, &bad, DEFAULT_TOL).is_err());
    }

    #[test]
    fn ratio_monotone_examples() {
        let id = builtin("id").unwrap();
        let sinh = builtin("sinh").unwrap();
        // z/sinh z decreases
        assert!(check_ratio_monotone(&sinh, &id, &unit_grid(), DEFAULT_TOL).passed());
        // constant ratio counts as non-increasing
        let r = check_ratio_monotone(&id, &id, &unit_grid(), DEFAULT_TOL);
        assert!(r.passed());
        // reverse direction fails
        assert!(!check_ratio_monotone(&id, &sinh, &unit_grid(), DEFAULT_TOL).passed());
    }

    #[test]
    fn diff_decreasing_examples() {
        let g = unit_grid();
        let tanh = builtin("tanh").unwrap();
        let arctan = builtin("arctan").unwrap();
        assert!(check_diff_decreasing(&tanh, &arctan, &g, DEFAULT_TOL).passed());
        let id = builtin("id").unwrap();
        let arsinh = builtin("arsinh").unwrap();
        assert!(!check_diff_decreasing(&id, &arsinh, &g, DEFAULT_TOL).passed());
        assert!(check_diff_decreasing(&arsinh, &id, &g, DEFAULT_TOL).passed());
        let r = check_diff_decreasing(&id, &id, &g, DEFAULT_TOL);
        assert!(r.passed());
        assert_eq!(r.worst_margin, 0.0);
    }

    #[test]
    fn q_increasing_examples() {
        let g = unit_grid();
        let he = lookup("He").unwrap();
        let a23 = lookup(&format!("Ar({})", 2.0 / 3.0)).unwrap();
        assert!(check_q_increasing(&he, &a23, &g, DEFAULT_TOL).passed());
        assert!(!check_q_increasing(&a23, &he, &g, DEFAULT_TOL).passed());
        let a_half = lookup("Ar(0.5)").unwrap();
        let a_one = lookup("A").unwrap();
        assert!(check_q_increasing(&a_half, &a_one, &g, DEFAULT_TOL).passed());
    }

    #[test]
    fn g_decreasing_examples() {
        let g = Grid1D::new(1.0 + 1e-3, 100.0, 2000).unwrap();
        let a = lookup("A").unwrap();
        let ssinh = lookup("Ssinh").unwrap();
        assert!(check_g_decreasing(&a, &ssinh, &g, DEFAULT_TOL).unwrap().passed());
        let r = check_g_decreasing(&a, &a, &g, DEFAULT_TOL).unwrap();
        assert!(r.passed());
        assert_eq!(r.worst_margin, 0.0);
        assert!(!check_g_decreasing(&ssinh, &a, &g, DEFAULT_TOL).unwrap().passed());
        assert!(check_g_decreasing(&a, &ssinh, &Grid1D::new(0.5, 2.0, 10).unwrap(), DEFAULT_TOL).is_err());
    }

    #[test]
    fn derivative_sign_examples() {
        let g = Grid1D::new(0.01, 0.99, 500).unwrap();
        let r = check_derivative_sign(|z| crate::special::artanh(z) - z.tan(), &g, Sign::Positive);
        assert!(r.passed(), "{r:?}");
        let r = check_derivative_sign(|z| z.sinh() - z, &g, Sign::Positive);
        assert!(r.passed());
        let r = check_derivative_sign(|_| 1.0, &g, Sign::Positive);
        assert_eq!(r.verdict, Verdict::Inconclusive);
        let r = check_derivative_sign(|z| -z, &g, Sign::Positive);
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn chain_of_one_mean_has_no_pairs() {
        let chain = ChainSpec {
            mean_ids: vec!["A".into()],
            relation: RelationKind::Ratio,
            grid: small_grid(),
        };
        assert!(verify_chain(&chain, DEFAULT_TOL).unwrap().is_empty());
    }

    #[test]
    fn chain_rejects_unknown_id() {
        let chain = ChainSpec {
            mean_ids: vec!["A".into(), "nope".into()],
            relation: RelationKind::Ratio,
            grid: small_grid(),
        };
        assert!(verify_chain(&chain, DEFAULT_TOL).is_err());
    }

    #[test]
    fn note_counterexample_reports() {
        let note = note_counterexample();
        assert!(note.inequality.passed(), "{:?}", note.inequality);
        assert!(note.non_monotonicity.passed());
        let [t1, t2] = note.non_monotonicity.worst_point.unwrap();
        assert!(t1 < t2);
        assert!(note_fn(t1) > note_fn(t2));
        // interior maximum beats the right endpoint
        assert!(note_fn(2.0 / 3.0) > note_fn(1.0 - 1e-12));
        assert!((note_fn(2.0 / 3.0) - (1.0 / 3.0 + 1.0 / 9.0)).abs() <= 1e-15);
    }

    #[test]
    fn note_fn_satisfies_both_bullets() {
        // increasing on (0, 1/3)
        let g = Grid1D::new(1e-3, 1.0 / 3.0 - 1e-6, 500).unwrap();
        let r = check_derivative_sign(note_fn, &g, Sign::Positive);
        assert!(r.passed());
        // f(x) >= 1/3 on [1/3, 1]
        for &t in &crate::grid::linspace(1.0 / 3.0, 1.0, 500) {
            assert!(note_fn(t) >= 1.0 / 3.0 - 1e-15);
        }
        // sup of (y-x)/(2-x-y) over the domain is 1/3
        let mut sup = 0.0f64;
        let coords = crate::grid::linspace(1e-4, 0.5 - 1e-4, 400);
        for (i, &x) in coords.iter().enumerate() {
            for &y in &coords[i + 1..] {
                sup = sup.max((y - x) / (2.0 - x - y));
            }
        }
        assert!(sup <= 1.0 / 3.0 + 1e-12);
        assert!(sup > 1.0 / 3.0 - 1e-3);
    }

    #[test]
    fn determinism_identical_grid_identical_report() {
        let g = lookup("G").unwrap();
        let a = lookup("A").unwrap();
        let r1 = check_ratio_kyfan(&g, &a, &small_grid(), DEFAULT_TOL).unwrap();
        let r2 = check_ratio_kyfan(&g, &a, &small_grid(), DEFAULT_TOL).unwrap();
        assert_eq!(r1.worst_margin.to_bits(), r2.worst_margin.to_bits());
        assert_eq!(r1.samples, r2.samples);
        assert_eq!(r1.worst_point, r2.worst_point);
    }

    #[test]
    fn diagonal_ratio_is_universal() {
        // at x = y every M/M' equals x/(1-x)
        for id in ["A", "G", "L", "NS", "Stan"] {
            let m = lookup(id).unwrap();
            for &x in &[0.1, 0.25, 0.5] {
                let r = m.eval(x, x).unwrap() / prime_of(&m, x, x).unwrap();
                assert!((r - x / (1.0 - x)).abs() <= 1e-15, "{id} at {x}");
            }
        }
    }
}
