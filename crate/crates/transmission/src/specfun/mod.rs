//! Bessel functions of the first kind, their spherical variants and zeros.

mod airy;
mod asymptotic;
mod bessel;
mod zeros;

pub use airy::airy_ai;
pub use asymptotic::{
    large_argument_envelope, large_argument_jm, large_argument_jm_prime,
    large_argument_prime_envelope, uniform_asymptotic_jm,
};
pub use bessel::{
    bessel_j, bessel_j_prime, bessel_j_triple, bessel_jnu, bessel_jnu_prime, spherical_bessel_j,
    spherical_bessel_j_prime, spherical_bessel_triple,
};
pub use zeros::{
    airy_zero_bracket, airy_zero_leading, bessel_prime_zero, bessel_prime_zero_nu, bessel_zero,
    bessel_zero_nu, zero_window,
};

/// Lower and upper sides of the ratio bound on J_{m+1}(mx)/J_m(mx), 0 < x <= 1.
pub fn ratio_bounds_next_order(m: u32, x: f64) -> (f64, f64) {
    let mf = m as f64;
    (x * mf / (2.0 * mf + 2.0), x * mf / (mf + 2.0))
}

/// Lower and upper sides of the bound on J'_m(x)/J_m(x), 0 < x <= m + 1/2.
pub fn log_derivative_bounds(m: u32, x: f64) -> (f64, f64) {
    let mf = m as f64;
    let lower = (((2.0 * mf + 1.0).powi(2) - 4.0 * x * x).sqrt() - 1.0) / (2.0 * x);
    (lower, mf / x)
}
