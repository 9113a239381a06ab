//! Test-only Taylor coefficient oracle, independent of the series module.
//!
//! Coefficients are extracted with the trapezoidal approximation of the
//! Cauchy integral over a complex circle: for analytic f,
//! c_k ~ (1/(N r^k)) sum_j f(r e^(i t_j)) e^(-i k t_j). The rule is
//! spectrally accurate on periodic integrands, and evaluating away from
//! the expansion point avoids the cancellation that kills direct finite
//! differencing of functions that vanish to high order there.

// each test binary compiles this module independently; not every binary
// uses every helper
#![allow(dead_code)]

use num_complex::Complex64;

pub fn taylor_coeff(f: impl Fn(Complex64) -> Complex64, k: u32, radius: f64) -> f64 {
    let n = 512usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        let w = Complex64::from_polar(1.0, theta);
        acc += f(radius * w) * Complex64::from_polar(1.0, -(k as f64) * theta);
    }
    acc.re / (n as f64 * radius.powi(k as i32))
}

/// s^4 + s^3 - s - 1 - 3(s^2+1)s log s as a function of u = 1 - s.
pub fn log_mean_target_shifted(u: Complex64) -> Complex64 {
    let s = Complex64::new(1.0, 0.0) - u;
    s.powu(4) + s.powu(3) - s - Complex64::new(1.0, 0.0)
        - Complex64::new(3.0, 0.0) * (s * s + 1.0) * s * s.ln()
}

/// (1/2) sin 2z - (1 - z^2) artanh z.
pub fn artanh_tan_target_c(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    Complex64::new(0.5, 0.0) * (2.0 * z).sin()
        - (one - z * z) * (Complex64::new(0.5, 0.0) * ((one + z) / (one - z)).ln())
}
