use std::f64::consts::PI;

use num_complex::Complex64;

use super::matrix::{assemble_a, assemble_generic, Layout};
use super::GENERIC_ANGLES;
use crate::diagnostics::quadrature_1d;
use crate::elastic2d::{wavenumbers, LameParameters, Side};
use crate::linalg::{equilibrated_nullvector, relative_residual};
use crate::specfun::spherical_bessel_triple;
use crate::{Error, Result};

/// A 3D transmission eigen-pair of order m and degree n.
#[derive(Debug, Clone, PartialEq)]
pub struct BallEigenMode {
    pub m: u32,
    pub n_deg: i32,
    pub omega: f64,
    pub params: LameParameters,
    /// (a, b, c, d, e, f): gradient, curl and double-curl weights of u, then of v.
    pub coeffs: [Complex64; 6],
    pub sv_ratio: f64,
    /// ‖A x‖ / (‖A‖ ‖x‖) at the assembly angle.
    pub residual: f64,
    /// Largest residual over the other generic angles.
    pub secondary_residual: f64,
}

impl BallEigenMode {
    /// Coefficients (gradient, curl, double-curl) of one side.
    pub fn side_coeffs(&self, side: Side) -> [Complex64; 3] {
        let c = &self.coeffs;
        match side {
            Side::U => [c[0], c[1], c[2]],
            Side::V => [c[3], c[4], c[5]],
        }
    }
}

/// Certified unit-norm nullvector of the corrected 6×6 system.
pub fn solve_coefficients_3d(m: u32, n_deg: i32, omega: f64, params: &LameParameters) -> Result<BallEigenMode> {
    solve_coefficients_3d_with(Layout::Corrected, m, n_deg, omega, params)
}

pub fn solve_coefficients_3d_with(
    layout: Layout,
    m: u32,
    n_deg: i32,
    omega: f64,
    params: &LameParameters,
) -> Result<BallEigenMode> {
    let (a, used) = assemble_generic(layout, m, n_deg, omega, params)?;
    let (mut x, sv_ratio) = equilibrated_nullvector(&a);
    if sv_ratio >= 1e-6 {
        return Err(Error::NotAnEigenvalue { ratio: sv_ratio });
    }
    let big = (0..6).max_by(|&i, &j| x[i].norm().total_cmp(&x[j].norm())).unwrap();
    let phase = x[big].conj() / x[big].norm();
    x.iter_mut().for_each(|v| *v *= phase);
    let residual = relative_residual(&a, &x);
    let mut secondary: f64 = 0.0;
    let mut checked = 0;
    let extra = [(0.6, 1.9), (2.2, 5.3)];
    for (i, &(t, p)) in GENERIC_ANGLES.iter().chain(extra.iter()).enumerate() {
        if i == used || checked == 3 {
            continue;
        }
        match assemble_a(layout, m, n_deg, omega, params, t, p) {
            Ok(b) => {
                secondary = secondary.max(relative_residual(&b, &x));
                checked += 1;
            }
            Err(Error::DegenerateAngle { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    if secondary > 1e-5 {
        return Err(Error::InconsistentNullspace { residual: secondary });
    }
    Ok(BallEigenMode {
        m,
        n_deg,
        omega,
        params: *params,
        coeffs: [x[0], x[2], x[1], -x[3], -x[5], -x[4]],
        sv_ratio,
        residual,
        secondary_residual: secondary,
    })
}

/// ∫₀^τ III₂(r) dr for one side; the squared L²(Ω_τ) norm up to the harmonic's weight.
///
/// `coeffs` is the (gradient, curl, double-curl) triple of the side.
pub fn radial_l2_3d(
    coeffs: [Complex64; 3],
    m: u32,
    omega: f64,
    params: &LameParameters,
    tau: f64,
    side: Side,
) -> Result<f64> {
    if !(tau > 0.0 && tau <= 1.0) {
        return Err(Error::Domain(format!("tau = {tau} outside (0, 1]")));
    }
    let w = wavenumbers(omega, params);
    let (kp, ks) = match side {
        Side::U => (w.k1, w.k2),
        Side::V => (w.k1_tilde, w.k2_tilde),
    };
    let [d, e, f] = coeffs;
    let mf = m as f64;
    let l = mf * (mf + 1.0);
    let weight = (2.0 * mf + 1.0) * mf * PI;
    let mut failure = None;
    let q = quadrature_1d(
        |r| {
            let terms = spherical_bessel_triple(m, kp * r).and_then(|p| Ok((p, spherical_bessel_triple(m, ks * r)?)));
            let ((jp_, djp, _), (js, djs, _)) = match terms {
                Ok(t) => t,
                Err(err) => {
                    failure = Some(err);
                    return 0.0;
                }
            };
            let radial = d * (kp * djp) + f * (l / r * js);
            let tangential = d * jp_ + f * (js + r * ks * djs);
            2.0 * PI * r * r * radial.norm_sqr()
                + weight * r * r * (e * js).norm_sqr()
                + weight * tangential.norm_sqr()
        },
        0.0,
        tau,
        kp.max(ks) * tau / PI,
    );
    if let Some(err) = failure {
        return Err(err);
    }
    Ok(q.value)
}

/// sqrt(∫₀^τ III₂ / ∫₀^1 III₂) for one side of a mode.
pub fn localization_ratio_3d(mode: &BallEigenMode, side: Side, tau: f64) -> Result<f64> {
    if !(tau > 0.0 && tau < 1.0) {
        return Err(Error::Domain(format!("tau = {tau} outside (0, 1)")));
    }
    let c = mode.side_coeffs(side);
    let inner = radial_l2_3d(c, mode.m, mode.omega, &mode.params, tau, side)?;
    let full = radial_l2_3d(c, mode.m, mode.omega, &mode.params, 1.0, side)?;
    if !(full > 0.0) {
        return Err(Error::DegenerateMode);
    }
    Ok((inner / full).sqrt())
}
