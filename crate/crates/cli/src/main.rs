//! `kyfan` — evaluate means, run inequality checks, verify preset chains.
//!
//! Exit status: 0 all checks passed, 1 a check failed, 2 configuration
//! error, 3 I/O error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kyfan_core::{
    chain_preset, check_diff_decreasing, check_g_decreasing, check_harmonic_kyfan,
    check_q_increasing, check_ratio_kyfan, check_ratio_monotone, cosh_bound_check, list_means,
    lookup, mean_to_seiffert, note_counterexample, partial_sum_vs_function, verify_chain,
    CheckReport, Grid1D, GridSpec, MeanDescriptor, SeriesFamily, DEFAULT_TOL,
};

#[derive(Parser)]
#[command(name = "kyfan", version, about = "Bivariate means and Ky Fan inequality checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Grid point count along x (2-D checks) or along the interval (1-D).
    #[arg(long, global = true)]
    nx: Option<usize>,
    /// Grid point count along y.
    #[arg(long, global = true)]
    ny: Option<usize>,
    /// Inequality margin tolerance (absolute).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    /// M/M' <= N/N' on a grid in (0, 1/2]^2.
    Ratio,
    /// 1/M - 1/M' <= 1/N - 1/N'.
    Harmonic,
    /// Hypothesis: n/m non-increasing on (0,1) (Seiffert functions of M, N).
    RatioMonotone,
    /// Hypothesis: M(1,t)/N(1,t) non-decreasing on (0,1).
    QIncreasing,
    /// Hypothesis: m - n non-increasing on (0,1).
    DiffDecreasing,
    /// Hypothesis: (s-1)(1/M(s,1) - 1/N(s,1)) non-increasing on (1, 100].
    GDecreasing,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesCmd {
    /// Coefficients and partial-sum check of the log-mean expansion.
    LogMean,
    /// Coefficients and partial-sum check of the artanh-tan expansion.
    ArtanhTan,
    /// cosh z < 1 + z^2/2 + z^4/12 on (0,1).
    CoshBound,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a mean at positive arguments.
    Eval { id: String, x: f64, y: f64 },
    /// Evaluate the Seiffert function of a mean at z, or, without z,
    /// validate the sandwich bounds on a 1-D grid.
    Seiffert { id: String, z: Option<f64> },
    /// Run a single pairwise check.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        m: String,
        n: String,
    },
    /// Verify a preset inequality chain (ns2003, ns2003-extended,
    /// harmonic-upper, harmonic-lower).
    Chain { name: String },
    /// Series certificates.
    Series {
        #[arg(value_enum)]
        family: SeriesCmd,
        /// Number of series terms for coefficient listing and partial sums.
        #[arg(long, default_value_t = 50)]
        terms: u32,
    },
    /// Demonstrate the non-monotone counterexample to the converse.
    NoteDemo,
    /// List the catalog means.
    Catalog,
    /// Export the ratio Ky Fan surface of a mean pair as CSV
    /// (header x,y,lhs,rhs,margin, row-major).
    Surface { m: String, n: String },
}

/// JSON document for a single check: stable key order, no timestamps.
#[derive(Serialize)]
struct ReportDoc {
    relation: String,
    means: Vec<String>,
    grid: serde_json::Value,
    verdict: kyfan_core::Verdict,
    worst_margin: f64,
    worst_point: Option<[f64; 2]>,
    samples: usize,
}

impl ReportDoc {
    fn new(report: &CheckReport, means: Vec<String>, grid: serde_json::Value) -> Self {
        ReportDoc {
            relation: report.relation.clone(),
            means,
            grid,
            verdict: report.verdict,
            worst_margin: report.worst_margin,
            worst_point: report.worst_point,
            samples: report.samples,
        }
    }
}

struct Output {
    out: Option<std::path::PathBuf>,
    buffer: String,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.buffer.push_str(s.as_ref());
        self.buffer.push('\n');
    }

    fn flush(self) -> std::io::Result<()> {
        match self.out {
            Some(path) => std::fs::write(path, self.buffer),
            None => std::io::stdout().write_all(self.buffer.as_bytes()),
        }
    }
}

fn report_text(r: &CheckReport) -> String {
    let mut s = format!(
        "[{}] {}  worst_margin={:.15e}  samples={}",
        r.verdict, r.relation, r.worst_margin, r.samples
    );
    if let Some([a, b]) = r.worst_point {
        s.push_str(&format!("  first_violation=({a}, {b})"));
    }
    s
}

fn grid2_json(g: &GridSpec) -> serde_json::Value {
    serde_json::to_value(g).expect("grid serializes")
}

fn grid1_json(g: &Grid1D) -> serde_json::Value {
    serde_json::to_value(g).expect("grid serializes")
}

fn emit_reports(
    out: &mut Output,
    format: Format,
    docs: &[(CheckReport, Vec<String>, serde_json::Value)],
) {
    match format {
        Format::Text => {
            for (r, _, _) in docs {
                out.line(report_text(r));
            }
        }
        Format::Json => {
            let body: Vec<ReportDoc> = docs
                .iter()
                .map(|(r, means, grid)| ReportDoc::new(r, means.clone(), grid.clone()))
                .collect();
            let doc = if body.len() == 1 {
                serde_json::to_string_pretty(&body[0]).expect("report serializes")
            } else {
                serde_json::to_string_pretty(&body).expect("report serializes")
            };
            out.line(doc);
        }
        Format::Csv => {
            out.line("relation,verdict,worst_margin,worst_x,worst_y,samples");
            for (r, _, _) in docs {
                let (wx, wy) = match r.worst_point {
                    Some([a, b]) => (a.to_string(), b.to_string()),
                    None => (String::new(), String::new()),
                };
                out.line(format!(
                    "{:?},{},{},{},{},{}",
                    r.relation, r.verdict, r.worst_margin, wx, wy, r.samples
                ));
            }
        }
    }
}

fn default_grid_env() -> Option<(usize, usize)> {
    let raw = std::env::var("KYFAN_DEFAULT_GRID").ok()?;
    let parts: Vec<&str> = raw.split('x').collect();
    match parts.as_slice() {
        [n] => {
            let n = n.trim().parse().ok()?;
            Some((n, n))
        }
        [a, b] => Some((a.trim().parse().ok()?, b.trim().parse().ok()?)),
        _ => None,
    }
}

fn grid2(cli: &Cli) -> Result<GridSpec, String> {
    let mut g = GridSpec::default_kyfan();
    if let Some((nx, ny)) = default_grid_env() {
        g.nx = nx;
        g.ny = ny;
    }
    if let Some(nx) = cli.nx {
        g.nx = nx;
    }
    if let Some(ny) = cli.ny {
        g.ny = ny;
    }
    g.validate().map_err(|e| e.to_string())?;
    Ok(g)
}

fn grid1(cli: &Cli, base: Grid1D) -> Result<Grid1D, String> {
    let mut g = base;
    if let Some((n, _)) = default_grid_env() {
        g.n = n;
    }
    if let Some(nx) = cli.nx {
        g.n = nx;
    }
    if g.n < 2 {
        return Err("grid point count must be >= 2".into());
    }
    Ok(g)
}

fn tolerance(cli: &Cli) -> Result<f64, String> {
    match cli.tol {
        None => Ok(DEFAULT_TOL),
        Some(t) if t > 0.0 && t.is_finite() => Ok(t),
        Some(t) => Err(format!("tolerance must be positive, got {t}")),
    }
}

fn lookup_pair(m: &str, n: &str) -> Result<(MeanDescriptor, MeanDescriptor), String> {
    Ok((lookup(m).map_err(|e| e.to_string())?, lookup(n).map_err(|e| e.to_string())?))
}

fn surface_csv(out: &mut Output, m: &MeanDescriptor, n: &MeanDescriptor, grid: &GridSpec) {
    out.line("x,y,lhs,rhs,margin");
    for [x, y] in grid.points() {
        let lhs = m.eval_unchecked(x, y) / m.eval_unchecked(1.0 - x, 1.0 - y);
        let rhs = n.eval_unchecked(x, y) / n.eval_unchecked(1.0 - x, 1.0 - y);
        out.line(format!("{x},{y},{lhs},{rhs},{}", rhs - lhs));
    }
}

enum RunError {
    Config(String),
    CheckFailed,
}

fn run(cli: &Cli, out: &mut Output) -> Result<(), RunError> {
    let cfg = |e: String| RunError::Config(e);
    let tol = tolerance(cli).map_err(cfg)?;
    let mut all_passed = true;

    match &cli.command {
        Command::Eval { id, x, y } => {
            let v = kyfan_core::eval_mean(id, *x, *y).map_err(|e| cfg(e.to_string()))?;
            match cli.format {
                Format::Json => out.line(
                    serde_json::json!({"mean": id, "x": x, "y": y, "value": v}).to_string(),
                ),
                _ => out.line(format!("{v}")),
            }
        }
        Command::Seiffert { id, z } => {
            let mean = lookup(id).map_err(|e| cfg(e.to_string()))?;
            let sf = mean_to_seiffert(&mean);
            match z {
                Some(z) => {
                    let v = sf.eval(*z).map_err(|e| cfg(e.to_string()))?;
                    match cli.format {
                        Format::Json => out.line(
                            serde_json::json!({"seiffert": sf.id, "z": z, "value": v}).to_string(),
                        ),
                        _ => out.line(format!("{v}")),
                    }
                }
                None => {
                    let g = grid1(cli, Grid1D::default_unit()).map_err(cfg)?;
                    let r = kyfan_core::validate_seiffert(&sf, &g, tol);
                    all_passed &= r.passed();
                    emit_reports(out, cli.format, &[(r, vec![id.clone()], grid1_json(&g))]);
                }
            }
        }
        Command::Check { kind, m, n } => {
            let (md, nd) = lookup_pair(m, n).map_err(cfg)?;
            let means = vec![m.clone(), n.clone()];
            match kind {
                CheckKind::Ratio | CheckKind::Harmonic => {
                    let g = grid2(cli).map_err(cfg)?;
                    let r = match kind {
                        CheckKind::Ratio => check_ratio_kyfan(&md, &nd, &g, tol),
                        _ => check_harmonic_kyfan(&md, &nd, &g, tol),
                    }
                    .map_err(|e| cfg(e.to_string()))?;
                    all_passed &= r.passed();
                    if cli.format == Format::Csv {
                        surface_csv(out, &md, &nd, &g);
                        if !all_passed {
                            return Err(RunError::CheckFailed);
                        }
                        return Ok(());
                    }
                    emit_reports(out, cli.format, &[(r, means, grid2_json(&g))]);
                }
                CheckKind::RatioMonotone | CheckKind::DiffDecreasing | CheckKind::QIncreasing => {
                    let g = grid1(cli, Grid1D::default_unit()).map_err(cfg)?;
                    let r = match kind {
                        CheckKind::RatioMonotone => {
                            check_ratio_monotone(&mean_to_seiffert(&md), &mean_to_seiffert(&nd), &g, tol)
                        }
                        CheckKind::DiffDecreasing => {
                            check_diff_decreasing(&mean_to_seiffert(&md), &mean_to_seiffert(&nd), &g, tol)
                        }
                        _ => check_q_increasing(&md, &nd, &g, tol),
                    };
                    all_passed &= r.passed();
                    emit_reports(out, cli.format, &[(r, means, grid1_json(&g))]);
                }
                CheckKind::GDecreasing => {
                    let g = grid1(cli, Grid1D::default_g()).map_err(cfg)?;
                    let r = check_g_decreasing(&md, &nd, &g, tol).map_err(|e| cfg(e.to_string()))?;
                    all_passed &= r.passed();
                    emit_reports(out, cli.format, &[(r, means, grid1_json(&g))]);
                }
            }
        }
        Command::Chain { name } => {
            let g = grid2(cli).map_err(cfg)?;
            let chains = chain_preset(name, g.clone()).map_err(|e| cfg(e.to_string()))?;
            let mut docs = Vec::new();
            for chain in &chains {
                let reports = verify_chain(chain, tol).map_err(|e| cfg(e.to_string()))?;
                for r in reports {
                    all_passed &= r.passed();
                    docs.push((r, chain.mean_ids.clone(), grid2_json(&g)));
                }
            }
            emit_reports(out, cli.format, &docs);
        }
        Command::Series { family, terms } => match family {
            SeriesCmd::CoshBound => {
                let g = grid1(cli, Grid1D::default_unit()).map_err(cfg)?;
                let r = cosh_bound_check(&g).map_err(|e| cfg(e.to_string()))?;
                all_passed &= r.passed();
                emit_reports(out, cli.format, &[(r, vec![], grid1_json(&g))]);
            }
            SeriesCmd::LogMean | SeriesCmd::ArtanhTan => {
                let (seq, check_grid, fam) = match family {
                    SeriesCmd::LogMean => (
                        kyfan_core::log_series_coeffs(5 + (*terms).max(1) - 1),
                        Grid1D::new(0.6, 1.0 - 1e-9, 500),
                        SeriesFamily::LogMeanSeries,
                    ),
                    _ => (
                        kyfan_core::artanh_tan_coeffs((*terms).max(1)),
                        Grid1D::new(1e-3, 0.5, 500),
                        SeriesFamily::ArtanhTanSeries,
                    ),
                };
                let seq = seq.map_err(|e| cfg(e.to_string()))?;
                let g = check_grid.map_err(|e| cfg(e.to_string()))?;
                let r = partial_sum_vs_function(fam, *terms, &g).map_err(|e| cfg(e.to_string()))?;
                all_passed &= r.passed();
                match cli.format {
                    Format::Json => {
                        out.line(
                            serde_json::to_string_pretty(&serde_json::json!({
                                "coefficients": seq,
                                "partial_sum_check": ReportDoc::new(&r, vec![], grid1_json(&g)),
                            }))
                            .expect("serializes"),
                        );
                    }
                    _ => {
                        for (k, v) in seq.values.iter().enumerate() {
                            out.line(format!("c_{} = {v}", seq.n_min as usize + k));
                        }
                        out.line(report_text(&r));
                    }
                }
            }
        },
        Command::NoteDemo => {
            let note = note_counterexample();
            all_passed &= note.inequality.passed() && note.non_monotonicity.passed();
            match cli.format {
                Format::Json => out.line(
                    serde_json::to_string_pretty(&note).expect("note serializes"),
                ),
                _ => {
                    out.line(format!("f: {}", note.description));
                    out.line(report_text(&note.inequality));
                    out.line(report_text(&note.non_monotonicity));
                    if let Some([t1, t2]) = note.non_monotonicity.worst_point {
                        out.line(format!(
                            "witness: t1={t1} < t2={t2} with f(t1)={} > f(t2)={}",
                            kyfan_core::note_fn(t1),
                            kyfan_core::note_fn(t2)
                        ));
                    }
                }
            }
        }
        Command::Catalog => match cli.format {
            Format::Json => {
                let rows: Vec<serde_json::Value> = list_means()
                    .iter()
                    .map(|m| {
                        serde_json::json!({
                            "id": m.id,
                            "display_name": m.display_name,
                            "kind": m.kind,
                        })
                    })
                    .collect();
                out.line(serde_json::to_string_pretty(&rows).expect("serializes"));
            }
            _ => {
                for m in list_means() {
                    out.line(format!("{:<10} {}", m.id, m.display_name));
                }
            }
        },
        Command::Surface { m, n } => {
            let (md, nd) = lookup_pair(m, n).map_err(cfg)?;
            let g = grid2(cli).map_err(cfg)?;
            g.validate_kyfan().map_err(|e| cfg(e.to_string()))?;
            surface_csv(out, &md, &nd, &g);
        }
    }

    if all_passed {
        Ok(())
    } else {
        Err(RunError::CheckFailed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output { out: cli.out.clone(), buffer: String::new() };
    let status = run(&cli, &mut out);
    if let Err(e) = out.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(3);
    }
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::CheckFailed) => ExitCode::from(1),
        Err(RunError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
