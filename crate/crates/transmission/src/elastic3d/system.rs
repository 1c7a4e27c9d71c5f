use crate::elastic2d::{wavenumbers, Bracket, BracketKind, LameParameters};
use crate::elastic2d::mono_indices;
use crate::specfun::{bessel_zero_nu, spherical_bessel_triple};
use crate::{roots, Error, Result};

use super::harmonics::spherical_harmonic;
use super::GENERIC_ANGLES;

fn jj(m: u32, x: f64) -> Result<(f64, f64)> {
    let (j, jp, _) = spherical_bessel_triple(m, x)?;
    Ok((j, jp))
}

fn check(m: u32, omega: f64) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain("angular order must be >= 1".into()));
    }
    if !(omega > 0.0) {
        return Err(Error::Domain(format!("omega = {omega} must be positive")));
    }
    Ok(())
}

/// k j'_m(k) j_m(kn) - kn j_m(k) j'_m(kn).
fn radial_factor(m: u32, k: f64, n: f64) -> Result<f64> {
    let (a, ap) = jj(m, k)?;
    let (b, bp) = jj(m, k * n)?;
    Ok(k * ap * b - k * n * a * bp)
}

/// Toroidal transmission condition F̃ = k₂ j'_m(k₂) j_m(k₂n) - k₂n j_m(k₂) j'_m(k₂n).
pub fn f_tilde(m: u32, omega: f64, params: &LameParameters) -> Result<f64> {
    check(m, omega)?;
    radial_factor(m, wavenumbers(omega, params).k2, params.contrast())
}

/// The compressional analogue k₁ j'_m(k₁) j_m(k₁n) - k₁n j_m(k₁) j'_m(k₁n).
pub fn f_compressional(m: u32, omega: f64, params: &LameParameters) -> Result<f64> {
    check(m, omega)?;
    radial_factor(m, wavenumbers(omega, params).k1, params.contrast())
}

/// Product of the two radial factors and the modulus of the bracketed 2×2
/// combination, with the angular ratios taken for Y_m^1 at the default generic angle.
pub fn det_fmn_radial(m: u32, omega: f64, params: &LameParameters) -> Result<f64> {
    check(m, omega)?;
    let w = wavenumbers(omega, params);
    let n = params.contrast();
    let k1_factor = radial_factor(m, w.k1, n)?;
    let k2_factor = radial_factor(m, w.k2, n)?;
    let (theta, phi) = GENERIC_ANGLES[0];
    let deg = 1;
    let h = spherical_harmonic(m, deg, theta, phi)?;
    let (s, c) = theta.sin_cos();
    let cot = c / s;
    let ratio = h.d_theta / h.d_phi;
    let y_ratio = h.y / h.d_theta;
    let k = w.k2;
    let kn = k * n;
    let (a, ap) = jj(m, k)?;
    let (b, bp) = jj(m, kn)?;
    let d1 = (a + k * ap) * kn * kn * b - (b + kn * bp) * k * k * a;
    let d2 = k * ap * b - kn * bp * a;
    let lead = (1.0 / s + ratio * s) / ((3.0 / (s * s)) * (1.0 - 2.0 * (deg * deg) as f64 * cot * y_ratio));
    let bracket = lead * d1 - ratio * s * d2;
    Ok(k1_factor * k2_factor * bracket.norm())
}

/// (√(μ/ρ) j_{m+1/2,s0}/n, √(μ/ρ) j_{m+1/2,s0+1}/n).
pub fn bracket_bi_3d(m: u32, s0: u32, params: &LameParameters) -> Result<Bracket> {
    if s0 == 0 {
        return Err(Error::Domain("s0 must be >= 1".into()));
    }
    let nu = m as f64 + 0.5;
    let c = (params.mu / params.rho).sqrt() / params.contrast();
    Ok(Bracket {
        lo: c * bessel_zero_nu(nu, s0)?,
        hi: c * bessel_zero_nu(nu, s0 + 1)?,
        kind: BracketKind::Bi { s0 },
    })
}

/// (√(μ/ρ) j_{m+1/2,s1}, √(μ/ρ) j_{m+1/2,s2}) with s_i = ⌊m^γi⌋.
pub fn bracket_mono_3d(m: u32, gamma1: f64, gamma2: f64, params: &LameParameters) -> Result<Bracket> {
    let (s1, s2) = mono_indices(m, gamma1, gamma2)?;
    let nu = m as f64 + 0.5;
    let c = (params.mu / params.rho).sqrt();
    Ok(Bracket {
        lo: c * bessel_zero_nu(nu, s1)?,
        hi: c * bessel_zero_nu(nu, s2)?,
        kind: BracketKind::Mono { s1, s2 },
    })
}

/// Scalar condition searched by `find_eigenvalue_3d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// F̃, the toroidal factor.
    FTilde,
    /// The radial part of the factored determinant.
    Radial,
    /// The k₁ factor alone.
    Compressional,
}

/// Smallest root of the chosen condition inside the bracket.
pub fn find_eigenvalue_3d(bracket: &Bracket, m: u32, params: &LameParameters, which: Condition) -> Result<f64> {
    let f = |omega: f64| match which {
        Condition::FTilde => f_tilde(m, omega, params),
        Condition::Radial => det_fmn_radial(m, omega, params),
        Condition::Compressional => f_compressional(m, omega, params),
    };
    roots::smallest_root(f, bracket.lo, bracket.hi)
}
