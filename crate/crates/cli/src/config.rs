use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use transmission::diagnostics::{Measure, Normalization, SectorRegion};
use transmission::elastic2d::LameParameters;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Material {
    pub lambda: f64,
    pub mu: f64,
    pub rho: f64,
    pub rho_tilde: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ModeKind {
    Bi,
    Mono,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
pub enum Norm {
    #[serde(rename = "v")]
    #[value(name = "v")]
    V,
    #[serde(rename = "u")]
    #[value(name = "u")]
    U,
}

impl From<Norm> for Normalization {
    fn from(n: Norm) -> Self {
        match n {
            Norm::V => Normalization::VUnit,
            Norm::U => Normalization::UUnit,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MeasureArg {
    Literal,
    Area,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Literal => Measure::Literal,
            MeasureArg::Area => Measure::Area,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sector {
    pub tau: f64,
    pub theta1: f64,
    pub theta2: f64,
}

/// Everything a run depends on. Output destination fields are never echoed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub material: Material,
    pub dimension: u32,
    pub mode_kind: ModeKind,
    pub m_list: Vec<u32>,
    pub s0: u32,
    pub gamma: [f64; 2],
    pub sector: Sector,
    pub normalization: Norm,
    pub measure: MeasureArg,
    pub tau_list: Vec<f64>,
    pub mu_list: Vec<f64>,
    pub mu_sweep_m: u32,
    pub m_range: [u32; 2],
    pub s_range: [u32; 2],
    pub grid: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_format: Option<Format>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let p = LameParameters::reference();
        let s = SectorRegion::reference();
        Self {
            material: Material {
                lambda: p.lambda,
                mu: p.mu,
                rho: p.rho,
                rho_tilde: p.rho_tilde,
            },
            dimension: 2,
            mode_kind: ModeKind::Bi,
            m_list: vec![4, 8, 13, 17, 22, 27, 34, 42],
            s0: 1,
            gamma: [0.3, 0.8],
            sector: Sector {
                tau: s.tau,
                theta1: s.theta1,
                theta2: s.theta2,
            },
            normalization: Norm::V,
            measure: MeasureArg::Literal,
            tau_list: vec![0.5],
            mu_list: (1..=8).map(f64::from).collect(),
            mu_sweep_m: 11,
            m_range: [0, 5],
            s_range: [1, 3],
            grid: [100, 256],
            output_path: None,
            output_format: None,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::io(format!("cannot read {}: {source}", path.display())))?;
        serde_json::from_str(&text).map_err(|source| CliError::usage(format!("invalid config {}: {source}", path.display())))
    }

    pub fn params(&self) -> Result<LameParameters, CliError> {
        let m = &self.material;
        LameParameters::new(m.lambda, m.mu, m.rho, m.rho_tilde, self.dimension)
            .map_err(|e| CliError::usage(e.to_string()))
    }

    pub fn region(&self) -> Result<SectorRegion, CliError> {
        let s = &self.sector;
        SectorRegion::new(s.tau, s.theta1, s.theta2).map_err(|e| CliError::usage(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.dimension != 2 && self.dimension != 3 {
            return Err(CliError::usage(format!("dimension {} is not 2 or 3", self.dimension)));
        }
        self.params()?;
        self.region()?;
        if self.m_list.is_empty() {
            return Err(CliError::usage("m_list is empty"));
        }
        if self.m_list.windows(2).any(|w| w[1] <= w[0]) || self.m_list[0] == 0 {
            return Err(CliError::usage("m_list must be positive and strictly increasing"));
        }
        if self.s0 == 0 {
            return Err(CliError::usage("s0 must be >= 1"));
        }
        let [g1, g2] = self.gamma;
        if !(0.0 < g1 && g1 < g2 && g2 < 1.0) {
            return Err(CliError::usage(format!("need 0 < gamma1 < gamma2 < 1, got {g1}, {g2}")));
        }
        if self.tau_list.iter().any(|t| !(*t > 0.0 && *t < 1.0)) {
            return Err(CliError::usage("tau values must lie in (0, 1)"));
        }
        if self.mu_list.iter().any(|m| m.is_nan() || *m <= 0.0) {
            return Err(CliError::usage("mu_list values must be positive"));
        }
        if self.grid[0] == 0 || self.grid[1] == 0 {
            return Err(CliError::usage("grid dimensions must be positive"));
        }
        Ok(())
    }

    /// The config as echoed into output headers: output destination stripped.
    pub fn echo(&self) -> Self {
        Self {
            output_path: None,
            output_format: None,
            ..self.clone()
        }
    }
}
