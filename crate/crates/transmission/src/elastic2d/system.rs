use nalgebra::DMatrix;
use num_complex::Complex64;

use super::params::{wavenumbers, LameParameters};
use crate::linalg::row_norm_product;
use crate::specfun::{bessel_j_triple, bessel_zero};
use crate::{roots, Error, Result};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn jj(m: u32, x: f64) -> Result<(f64, f64)> {
    let (j, jp, _) = bessel_j_triple(m, x)?;
    Ok((j, jp))
}

/// The 4×4 transmission matrix; columns act on (α, γ, β, δ).
pub fn boundary_matrix(m: u32, omega: f64, params: &LameParameters) -> Result<DMatrix<Complex64>> {
    if m == 0 {
        return Err(Error::Domain("angular order must be >= 1".into()));
    }
    if !(omega > 0.0) {
        return Err(Error::Domain(format!("omega = {omega} must be positive")));
    }
    let w = wavenumbers(omega, params);
    let mu = params.mu;
    let mf = m as f64;
    let im = I * mf;
    let (j1, jp1) = jj(m, w.k1)?;
    let (j2, jp2) = jj(m, w.k2)?;
    let (t1, tp1) = jj(m, w.k1_tilde)?;
    let (t2, tp2) = jj(m, w.k2_tilde)?;
    let w2 = omega * omega;
    let bg = params.rho * w2 - 2.0 * mu * mf * mf;
    let inc = params.rho_tilde * w2 - 2.0 * mu * mf * mf;

    let a = bg * j1 + 2.0 * mu * w.k1 * jp1;
    let b = 2.0 * mu * im * (w.k2 * jp2 - j2);
    let c = -(inc * t1 + 2.0 * mu * w.k1_tilde * tp1);
    let d = -2.0 * mu * im * (w.k2_tilde * tp2 - t2);
    let e = -2.0 * mu * im * (w.k1 * jp1 - j1);
    let f = bg * j2 + 2.0 * mu * w.k2 * jp2;
    let g = 2.0 * mu * im * (w.k1_tilde * tp1 - t1);
    let h = -(inc * t2 + 2.0 * mu * w.k2_tilde * tp2);

    let re = |v: f64| Complex64::new(v, 0.0);
    Ok(DMatrix::from_row_slice(
        4,
        4,
        &[
            re(w.k1 * jp1),
            -im * j2,
            re(-w.k1_tilde * tp1),
            im * t2,
            im * j1,
            re(w.k2 * jp2),
            -im * t1,
            re(-w.k2_tilde * tp2),
            re(a),
            b,
            re(c),
            d,
            e,
            re(f),
            g,
            re(h),
        ],
    ))
}

/// Which component of the complex determinant carries the zero set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetComponent {
    Real,
    Imaginary,
}

fn component(m: u32, omega: f64, params: &LameParameters, which: Option<DetComponent>) -> Result<f64> {
    let a = boundary_matrix(m, omega, params)?;
    let d = a.clone().determinant();
    let which = which.unwrap_or(if d.re.abs() >= d.im.abs() {
        DetComponent::Real
    } else {
        DetComponent::Imaginary
    });
    let (main, other) = match which {
        DetComponent::Real => (d.re, d.im),
        DetComponent::Imaginary => (d.im, d.re),
    };
    if other.abs() > 1e-8 * row_norm_product(&a) {
        return Err(Error::MixedDeterminant { re: d.re, im: d.im });
    }
    Ok(main)
}

/// Dominant real-valued reduction of det(boundary_matrix).
pub fn det_fm(m: u32, omega: f64, params: &LameParameters) -> Result<f64> {
    component(m, omega, params, None)
}

/// Picks the determinant component from a sample of interior points of (lo, hi).
pub fn calibrate_component(m: u32, lo: f64, hi: f64, params: &LameParameters) -> Result<DetComponent> {
    let mut re: f64 = 0.0;
    let mut im: f64 = 0.0;
    for i in 1..=8 {
        let omega = lo + (hi - lo) * i as f64 / 9.0;
        let d = boundary_matrix(m, omega, params)?.determinant();
        re = re.max(d.re.abs());
        im = im.max(d.im.abs());
    }
    Ok(if re >= im {
        DetComponent::Real
    } else {
        DetComponent::Imaginary
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BracketKind {
    Mono { s1: u32, s2: u32 },
    Bi { s0: u32 },
}

/// Frequency interval expected to hold a transmission eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub kind: BracketKind,
}

impl Bracket {
    pub fn contains(&self, omega: f64) -> bool {
        omega > self.lo && omega < self.hi
    }
}

/// ⌊m^γ1⌋ and ⌊m^γ2⌋.
pub fn mono_indices(m: u32, gamma1: f64, gamma2: f64) -> Result<(u32, u32)> {
    if !(0.0 < gamma1 && gamma1 < gamma2 && gamma2 < 1.0) {
        return Err(Error::Domain(format!(
            "need 0 < gamma1 < gamma2 < 1, got ({gamma1}, {gamma2})"
        )));
    }
    let mf = m as f64;
    let s1 = mf.powf(gamma1).floor() as u32;
    let s2 = mf.powf(gamma2).floor() as u32;
    if s1 == 0 {
        return Err(Error::Domain(format!("m = {m} too small: s1 = 0")));
    }
    if s1 == s2 {
        return Err(Error::DegenerateBracket(s1));
    }
    Ok((s1, s2))
}

pub fn bracket_mono(m: u32, gamma1: f64, gamma2: f64, params: &LameParameters) -> Result<Bracket> {
    let (s1, s2) = mono_indices(m, gamma1, gamma2)?;
    let c = (params.mu / params.rho).sqrt();
    Ok(Bracket {
        lo: c * bessel_zero(m, s1)?,
        hi: c * bessel_zero(m, s2)?,
        kind: BracketKind::Mono { s1, s2 },
    })
}

pub fn bracket_bi(m: u32, s0: u32, params: &LameParameters) -> Result<Bracket> {
    if s0 == 0 {
        return Err(Error::Domain("s0 must be >= 1".into()));
    }
    let c = (params.mu / params.rho).sqrt() / params.contrast();
    Ok(Bracket {
        lo: c * bessel_zero(m, s0)?,
        hi: c * bessel_zero(m, s0 + 1)?,
        kind: BracketKind::Bi { s0 },
    })
}

/// Smallest root of det_fm inside the bracket.
pub fn find_eigenvalue(bracket: &Bracket, m: u32, params: &LameParameters) -> Result<f64> {
    let which = calibrate_component(m, bracket.lo, bracket.hi, params)?;
    roots::smallest_root(
        |omega| component(m, omega, params, Some(which)),
        bracket.lo,
        bracket.hi,
    )
}
