//! Quadrature, norms, localization ratios, stresses, sector energies and growth fits.

mod energy;
mod fit;
mod norms;
mod quadrature;

pub use energy::{
    grad_sup, grad_sup_on_grid, sector_energy, sector_energy_detailed, EnergyReport, Measure,
    SectorRegion,
};
pub use fit::{growth_order_fit, integral_estimate_check, integral_estimate_lhs, GrowthFit};
pub use norms::{
    l2_norm, l2_norm_grid, l2_norm_part, l2_norm_sq_detailed, localization_ratio,
    localization_ratio_part, normalize, Normalization,
};
pub use quadrature::{composite_nodes, gauss_legendre, panel_count, quadrature_1d, Quadrature};

use crate::elastic2d::{DiskEigenMode, Part, Side, C22};
use crate::Result;

/// Cartesian Jacobian of the displacement; the origin uses analytic limits.
pub fn gradient(mode: &DiskEigenMode, side: Side, r: f64, theta: f64) -> Result<C22> {
    mode.gradient(side, Part::Total, r, theta)
}

/// Cauchy stress tensor.
pub fn stress(mode: &DiskEigenMode, side: Side, r: f64, theta: f64) -> Result<C22> {
    mode.stress(side, r, theta)
}
