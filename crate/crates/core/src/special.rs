//! Accurate scalar helpers shared by the catalog and the Seiffert bridge.

/// Inverse hyperbolic tangent on (-1, 1), computed through `log1p` so the
/// result stays accurate for arguments near zero.
pub fn artanh(z: f64) -> f64 {
    0.5 * (2.0 * z / (1.0 - z)).ln_1p()
}

/// cosh(z) - 1 without cancellation for small z.
pub fn coshm1(z: f64) -> f64 {
    let s = (0.5 * z).sinh();
    2.0 * s * s
}
