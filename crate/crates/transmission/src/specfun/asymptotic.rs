use std::f64::consts::PI;

use super::airy::airy_ai;

/// Airy-type uniform approximation of J_m(m x) for 0 < x < 1.
pub fn uniform_asymptotic_jm(m: u32, x_ratio: f64) -> f64 {
    let mf = m as f64;
    let w = (1.0 - x_ratio * x_ratio).sqrt();
    let zeta = (1.5 * (((1.0 + w) / x_ratio).ln() - w)).powf(2.0 / 3.0);
    let prefactor = (4.0 * zeta / (1.0 - x_ratio * x_ratio)).powf(0.25);
    prefactor * airy_ai(mf.powf(2.0 / 3.0) * zeta) / mf.cbrt()
}

/// Leading large-argument form of J_m(x) for x > m.
pub fn large_argument_jm(m: u32, x: f64) -> f64 {
    let mf = m as f64;
    let w = (x * x - mf * mf).sqrt();
    (2.0 / (PI * w)).sqrt() * (w - mf * PI / 2.0 + mf * (mf / x).asin() - PI / 4.0).cos()
}

/// Leading large-argument form of J'_m(x) for x > m.
///
/// The arccos term enters the phase with a negative sign; with the opposite
/// sign the formula drifts out of phase by 2 m arccos(m/x).
pub fn large_argument_jm_prime(m: u32, x: f64) -> f64 {
    let mf = m as f64;
    let w = (x * x - mf * mf).sqrt();
    (2.0 * w / (PI * x * x)).sqrt() * (w - mf * (mf / x).acos() + PI / 4.0).cos()
}

/// Envelope sqrt(2 / (pi sqrt(x^2 - m^2))) of the large-argument form of J_m.
pub fn large_argument_envelope(m: u32, x: f64) -> f64 {
    let mf = m as f64;
    (2.0 / (PI * (x * x - mf * mf).sqrt())).sqrt()
}

/// Envelope of the large-argument form of J'_m.
pub fn large_argument_prime_envelope(m: u32, x: f64) -> f64 {
    let mf = m as f64;
    (2.0 * (x * x - mf * mf).sqrt() / (PI * x * x)).sqrt()
}
