use std::f64::consts::PI;

use super::quadrature::{composite_nodes, panel_count};
use crate::elastic2d::{energy_density, stress_from_gradient, DiskEigenMode, Part, Side};
use crate::{Error, Result};

/// Annular sector Σ(τ, θ1, θ2) = {τ < r < 1, θ1 < θ < θ2}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorRegion {
    pub tau: f64,
    pub theta1: f64,
    pub theta2: f64,
}

impl SectorRegion {
    pub fn new(tau: f64, theta1: f64, theta2: f64) -> Result<Self> {
        if !(tau > 0.0 && tau < 1.0) {
            return Err(Error::Domain(format!("tau = {tau} outside (0, 1)")));
        }
        if !(0.0 <= theta1 && theta1 < theta2 && theta2 <= 2.0 * PI) {
            return Err(Error::Domain(format!("bad angles ({theta1}, {theta2})")));
        }
        Ok(Self { tau, theta1, theta2 })
    }

    /// Σ(2/3, 0, π/3).
    pub fn reference() -> Self {
        Self {
            tau: 2.0 / 3.0,
            theta1: 0.0,
            theta2: PI / 3.0,
        }
    }
}

/// Area element used for the sector integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// dr dθ
    Literal,
    /// r dr dθ
    Area,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyReport {
    pub value: f64,
    pub imaginary: f64,
    pub doubling_diff: f64,
    pub warning: bool,
}

fn energy_on_grid(
    mode: &DiskEigenMode,
    side: Side,
    region: &SectorRegion,
    measure: Measure,
    radial_panels: usize,
    angular_panels: usize,
) -> Result<(f64, f64)> {
    let radial = composite_nodes(region.tau, 1.0, radial_panels);
    let angular = composite_nodes(region.theta1, region.theta2, angular_panels);
    let (lambda, mu) = (mode.params.lambda, mode.params.mu);
    let mut re = 0.0;
    let mut im = 0.0;
    for &(r, wr) in &radial {
        let f = mode.at_radius(side, r)?;
        let weight = match measure {
            Measure::Literal => wr,
            Measure::Area => wr * r,
        };
        for &(t, wt) in &angular {
            let g = f.jacobian(Part::Total, t);
            let e = energy_density(&stress_from_gradient(&g, lambda, mu), &g);
            re += weight * wt * e.re;
            im += weight * wt * e.im;
        }
    }
    Ok((re, im))
}

/// ∫_Σ Re(σ(w) : ∇w̄) under the chosen measure, with a grid-doubling check.
pub fn sector_energy_detailed(
    mode: &DiskEigenMode,
    side: Side,
    region: &SectorRegion,
    measure: Measure,
) -> Result<EnergyReport> {
    let ((_, kp), (_, ks)) = mode.potentials(side);
    let pr = panel_count(kp.max(ks) * (1.0 - region.tau) / PI);
    let pt = panel_count(mode.m as f64 * (region.theta2 - region.theta1) / PI);
    let (coarse, _) = energy_on_grid(mode, side, region, measure, pr, pt)?;
    let (fine, im) = energy_on_grid(mode, side, region, measure, 2 * pr, 2 * pt)?;
    let diff = (fine - coarse).abs();
    if im.abs() > 1e-8 * fine.abs() {
        return Err(Error::Domain(format!(
            "energy has imaginary part {im:e} against {fine:e}"
        )));
    }
    Ok(EnergyReport {
        value: fine,
        imaginary: im,
        doubling_diff: diff,
        warning: diff > 1e-8 * fine.abs(),
    })
}

pub fn sector_energy(mode: &DiskEigenMode, side: Side, region: &SectorRegion, measure: Measure) -> Result<f64> {
    Ok(sector_energy_detailed(mode, side, region, measure)?.value)
}

/// Max of the Frobenius norm of ∇w on a uniform (radial × angular) grid over Σ.
pub fn grad_sup_on_grid(
    mode: &DiskEigenMode,
    side: Side,
    region: &SectorRegion,
    radial_nodes: usize,
    angular_nodes: usize,
) -> Result<f64> {
    let mut best: f64 = 0.0;
    for i in 0..radial_nodes {
        let r = region.tau + (1.0 - region.tau) * i as f64 / (radial_nodes - 1) as f64;
        let f = mode.at_radius(side, r)?;
        for j in 0..angular_nodes {
            let t = region.theta1 + (region.theta2 - region.theta1) * j as f64 / (angular_nodes - 1) as f64;
            let g = f.jacobian(Part::Total, t);
            let fro = g.iter().flatten().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            best = best.max(fro);
        }
    }
    Ok(best)
}

/// max_Σ |∇w| on the default grid: 41 radial nodes, max(64, 8m) angular nodes.
pub fn grad_sup(mode: &DiskEigenMode, side: Side, region: &SectorRegion) -> Result<f64> {
    grad_sup_on_grid(mode, side, region, 41, (8 * mode.m as usize).max(64))
}
