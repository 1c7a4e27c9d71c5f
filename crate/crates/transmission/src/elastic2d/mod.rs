//! Transmission eigenvalues and eigen-pairs on the unit disk.

mod field;
mod mode;
mod params;
mod system;

pub use field::{Jet, RadialJet, C2, C22};
pub use mode::{
    energy_density, solve_coefficients, stress_from_gradient, DiskEigenMode, Part, RadialField, Side,
};
pub use params::{wavenumbers, LameParameters, Wavenumbers};
pub use system::{
    boundary_matrix, bracket_bi, bracket_mono, calibrate_component, det_fm, find_eigenvalue,
    mono_indices, Bracket, BracketKind, DetComponent,
};
