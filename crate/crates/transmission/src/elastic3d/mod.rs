//! Transmission eigenvalues and eigen-pairs on the unit ball.

mod harmonics;
mod matrix;
mod mode;
mod system;

/// Default generic angles (θ₀, φ₀), tried in order.
pub const GENERIC_ANGLES: [(f64, f64); 3] = [(1.1, 0.7), (0.9, 2.3), (1.7, 4.1)];

pub use harmonics::{associated_legendre, normalized_legendre, spherical_harmonic, Harmonic};
pub use matrix::{assemble_a, det_a_root, Layout};
pub use mode::{localization_ratio_3d, radial_l2_3d, solve_coefficients_3d, solve_coefficients_3d_with, BallEigenMode};
pub use system::{
    bracket_bi_3d, bracket_mono_3d, det_fmn_radial, f_compressional, f_tilde, find_eigenvalue_3d, Condition,
};
