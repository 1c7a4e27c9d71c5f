use crate::{Error, Result};

/// Lamé constants shared by both media, and the two densities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LameParameters {
    pub lambda: f64,
    pub mu: f64,
    pub rho: f64,
    pub rho_tilde: f64,
}

impl LameParameters {
    /// Validated parameters for spatial dimension `dim`.
    pub fn new(lambda: f64, mu: f64, rho: f64, rho_tilde: f64, dim: u32) -> Result<Self> {
        let p = Self {
            lambda,
            mu,
            rho,
            rho_tilde,
        };
        p.validate(dim)?;
        Ok(p)
    }

    /// λ = μ = ρ = 1, ρ̃ = 20: the bi-localized reference material.
    pub const fn reference() -> Self {
        Self {
            lambda: 1.0,
            mu: 1.0,
            rho: 1.0,
            rho_tilde: 20.0,
        }
    }

    pub fn validate(&self, dim: u32) -> Result<()> {
        let all = [self.lambda, self.mu, self.rho, self.rho_tilde];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameters("non-finite value".into()));
        }
        if self.mu <= 0.0 {
            return Err(Error::InvalidParameters(format!("mu = {} must be positive", self.mu)));
        }
        if 2.0 * self.lambda + dim as f64 * self.mu <= 0.0 {
            return Err(Error::InvalidParameters(format!(
                "2 lambda + {dim} mu must be positive"
            )));
        }
        if self.rho <= 0.0 || self.rho_tilde <= 0.0 {
            return Err(Error::InvalidParameters("densities must be positive".into()));
        }
        if self.rho == self.rho_tilde {
            return Err(Error::InvalidParameters("rho and rho_tilde coincide".into()));
        }
        Ok(())
    }

    /// Contrast n = sqrt(ρ̃ / ρ).
    pub fn contrast(&self) -> f64 {
        (self.rho_tilde / self.rho).sqrt()
    }

    /// P-wave modulus λ + 2μ.
    pub fn p_modulus(&self) -> f64 {
        self.lambda + 2.0 * self.mu
    }

    /// n sqrt(μ / (λ + 2μ)), the quantity separating the two mono regimes.
    pub fn mono_indicator(&self) -> f64 {
        self.contrast() * (self.mu / self.p_modulus()).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wavenumbers {
    pub k1: f64,
    pub k2: f64,
    pub k1_tilde: f64,
    pub k2_tilde: f64,
}

pub fn wavenumbers(omega: f64, params: &LameParameters) -> Wavenumbers {
    let p = params.p_modulus();
    Wavenumbers {
        k1: omega * (params.rho / p).sqrt(),
        k2: omega * (params.rho / params.mu).sqrt(),
        k1_tilde: omega * (params.rho_tilde / p).sqrt(),
        k2_tilde: omega * (params.rho_tilde / params.mu).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_wavenumbers() {
        let w = wavenumbers(1.0, &LameParameters::reference());
        assert!((w.k1 - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((w.k2 - 1.0).abs() < 1e-15);
        assert!((w.k1_tilde - (20.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((w.k2_tilde - 20f64.sqrt()).abs() < 1e-15);
        let w = wavenumbers(2.19, &LameParameters::reference());
        assert!((w.k2_tilde - 9.794).abs() < 1e-3);
    }

    #[test]
    fn rejects_bad_material() {
        assert!(LameParameters::new(1.0, 0.0, 1.0, 2.0, 2).is_err());
        assert!(LameParameters::new(-1.5, 1.0, 1.0, 2.0, 2).is_err());
        assert!(LameParameters::new(-1.6, 1.0, 1.0, 2.0, 3).is_err());
        assert!(LameParameters::new(1.0, 1.0, 2.0, 2.0, 2).is_err());
        assert!(LameParameters::new(1.0, 1.0, 1.0, 20.0, 2).is_ok());
    }
}
