use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("zero refinement did not converge; last bracket ({lo}, {hi})")]
    ZeroNotConverged { lo: f64, hi: f64 },
    #[error("zero {value} of order {order}, index {s} violates the window ({lo}, {hi})")]
    ZeroOutsideWindow {
        order: f64,
        s: u32,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("degenerate bracket: s1 = s2 = {0}")]
    DegenerateBracket(u32),
    #[error("no sign change in ({lo}, {hi}) at {panels} panels")]
    NoRootFound { lo: f64, hi: f64, panels: usize },
    #[error("determinant components are comparable (re = {re:e}, im = {im:e})")]
    MixedDeterminant { re: f64, im: f64 },
    #[error("not an eigenvalue: singular-value ratio {ratio:e}")]
    NotAnEigenvalue { ratio: f64 },
    #[error("degenerate angle ({theta}, {phi})")]
    DegenerateAngle { theta: f64, phi: f64 },
    #[error("nullvector residual {residual:e} at secondary angle exceeds tolerance")]
    InconsistentNullspace { residual: f64 },
    #[error("degenerate mode: zero norm")]
    DegenerateMode,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
