//! Bivariate symmetric homogeneous means, their Seiffert-function
//! representation, and numerical verification of Ky Fan inequalities.
//!
//! The crate is organized around the correspondence
//! M(x,y) = |x-y| / (2 m(|x-y|/(x+y))) between symmetric homogeneous
//! means M and Seiffert functions m, and the two sufficient conditions it
//! yields: a decreasing ratio n/m gives M/M' <= N/N', and a decreasing
//! difference m - n gives 1/M - 1/M' <= 1/N - 1/N' (prime = the mean at
//! complemented arguments 1-x, 1-y).

pub mod error;
pub mod grid;
pub mod means;
pub mod presets;
pub mod report;
pub mod seiffert;
pub mod series;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{Grid1D, GridSpec};
pub use means::{eval_mean, heronian, list_means, lookup, power_mean, MeanDescriptor, MeanId, MeanKind};
pub use presets::{chain_preset, chain_preset_names, preset_pairs, PresetPair};
pub use report::{CheckReport, Verdict, DEFAULT_TOL};
pub use seiffert::{
    builtin, list_builtins, mean_to_seiffert, roundtrip_check, seiffert_to_mean, validate_seiffert,
    SeiffertDescriptor, SeiffertOrigin,
};
pub use series::{
    artanh_tan_coeffs, artanh_tan_partial, artanh_tan_target, cosh_bound_check, log_mean_target,
    log_series_coeffs, log_series_partial, partial_sum_vs_function, CoefficientSequence, SeriesFamily,
};
pub use verify::{
    check_derivative_sign, check_diff_decreasing, check_g_decreasing, check_harmonic_kyfan,
    check_q_increasing, check_ratio_kyfan, check_ratio_monotone, note_counterexample, note_fn,
    prime_of, verify_chain, ChainSpec, NoteCounterexample, RelationKind, Sign,
};
