//! Elastic transmission eigenvalues of the Lamé system on the unit disk and ball.
//!
//! The engine is semi-analytic: eigenvalues are roots of small determinants built
//! from Bessel functions, and every quantity derived from a mode (norms, energies,
//! stress suprema) reduces to one-dimensional or tensor-grid quadrature.

pub mod diagnostics;
pub mod elastic2d;
pub mod elastic3d;
mod error;
mod linalg;
pub mod roots;
pub mod specfun;

pub use error::{Error, Result};
