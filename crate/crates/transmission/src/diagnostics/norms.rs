use std::f64::consts::PI;

use super::quadrature::{composite_nodes, panel_count, quadrature_1d, Quadrature};
use crate::elastic2d::{DiskEigenMode, Part, Side};
use crate::specfun::bessel_j_triple;
use crate::{Error, Result};

fn check_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0 && tau <= 1.0) {
        return Err(Error::Domain(format!("tau = {tau} outside (0, 1]")));
    }
    Ok(())
}

/// ‖part of side‖²_{L²(Ω_τ)} by the radial reduction, with the quadrature report.
pub fn l2_norm_sq_detailed(mode: &DiskEigenMode, side: Side, part: Part, tau: f64) -> Result<Quadrature> {
    check_tau(tau)?;
    let m = mode.m;
    let mf = m as f64;
    let ((cp, kp), (cs, ks)) = mode.potentials(side);
    let (wp, ws) = match part {
        Part::Total => (cp.norm_sqr(), cs.norm_sqr()),
        Part::P => (cp.norm_sqr(), 0.0),
        Part::S => (0.0, cs.norm_sqr()),
    };
    let cross = if part == Part::Total {
        (cp * cs.conj()).im
    } else {
        0.0
    };
    let mut failure = None;
    let mut most_negative: f64 = 0.0;
    let mut scale: f64 = 0.0;
    let q = quadrature_1d(
        |r| {
            let terms = bessel_j_triple(m, kp * r).and_then(|a| Ok((a, bessel_j_triple(m, ks * r)?)));
            let ((j1, jp1, _), (j2, jp2, _)) = match terms {
                Ok(t) => t,
                Err(e) => {
                    failure = Some(e);
                    return 0.0;
                }
            };
            let a = kp * kp * jp1 * jp1 * r + mf * mf * j1 * j1 / r;
            let b = ks * ks * jp2 * jp2 * r + mf * mf * j2 * j2 / r;
            let h_prime = kp * jp1 * j2 + ks * j1 * jp2;
            let val = wp * a + ws * b - 2.0 * cross * mf * h_prime;
            scale = scale.max(wp * a + ws * b);
            most_negative = most_negative.min(val);
            val
        },
        0.0,
        tau,
        kp.max(ks) * tau / PI,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    if most_negative < -1e-10 * scale {
        return Err(Error::Domain(format!(
            "negative L2 density {most_negative:e} against scale {scale:e}"
        )));
    }
    Ok(Quadrature {
        value: 2.0 * PI * q.value,
        doubling_diff: 2.0 * PI * q.doubling_diff,
        ..q
    })
}

/// ‖part of side‖_{L²(Ω_τ)}.
pub fn l2_norm_part(mode: &DiskEigenMode, side: Side, part: Part, tau: f64) -> Result<f64> {
    Ok(l2_norm_sq_detailed(mode, side, part, tau)?.value.max(0.0).sqrt())
}

/// ‖side‖_{L²(Ω_τ)}.
pub fn l2_norm(mode: &DiskEigenMode, side: Side, tau: f64) -> Result<f64> {
    l2_norm_part(mode, side, Part::Total, tau)
}

/// Independent tensor-grid value of ‖part of side‖_{L²(Ω_τ)}.
pub fn l2_norm_grid(mode: &DiskEigenMode, side: Side, part: Part, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    let ((_, kp), (_, ks)) = mode.potentials(side);
    let radial = composite_nodes(0.0, tau, 2 * panel_count(kp.max(ks) * tau / PI));
    let angular = composite_nodes(0.0, 2.0 * PI, 2 * panel_count(2.0 * mode.m as f64));
    let mut total = 0.0;
    for &(r, wr) in &radial {
        let f = mode.at_radius(side, r)?;
        let mut ring = 0.0;
        for &(t, wt) in &angular {
            let u = f.displacement(part, t);
            ring += wt * (u[0].norm_sqr() + u[1].norm_sqr());
        }
        total += wr * r * ring;
    }
    Ok(total.sqrt())
}

/// ‖part‖_{L²(Ω_τ)} / ‖part‖_{L²(Ω)}.
pub fn localization_ratio_part(mode: &DiskEigenMode, side: Side, part: Part, tau: f64) -> Result<f64> {
    if !(tau > 0.0 && tau < 1.0) {
        return Err(Error::Domain(format!("tau = {tau} outside (0, 1)")));
    }
    let inner = l2_norm_part(mode, side, part, tau)?;
    let full = l2_norm_part(mode, side, part, 1.0)?;
    if full == 0.0 {
        return Err(Error::DegenerateMode);
    }
    Ok(inner / full)
}

/// ‖side‖_{L²(Ω_τ)} / ‖side‖_{L²(Ω)}.
pub fn localization_ratio(mode: &DiskEigenMode, side: Side, tau: f64) -> Result<f64> {
    localization_ratio_part(mode, side, Part::Total, tau)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normalization {
    VUnit,
    UUnit,
}

/// Rescales all coefficients by one positive factor so the chosen side has unit L² norm.
pub fn normalize(mode: &DiskEigenMode, convention: Normalization) -> Result<DiskEigenMode> {
    let side = match convention {
        Normalization::VUnit => Side::V,
        Normalization::UUnit => Side::U,
    };
    let n = l2_norm(mode, side, 1.0)?;
    if !(n > 0.0) {
        return Err(Error::DegenerateMode);
    }
    Ok(mode.scaled(1.0 / n))
}
