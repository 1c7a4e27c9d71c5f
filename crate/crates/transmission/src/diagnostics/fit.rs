use super::quadrature::quadrature_1d;
use crate::specfun::bessel_j;
use crate::{Error, Result};

/// Least-squares fit of log y = slope · log x + intercept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub sample_count: usize,
}

pub fn growth_order_fit(samples: &[(f64, f64)]) -> Result<GrowthFit> {
    if samples.len() < 3 {
        return Err(Error::Domain(format!("need >= 3 samples, got {}", samples.len())));
    }
    if let Some((x, y)) = samples.iter().find(|(x, y)| !(*x > 0.0 && *y > 0.0)) {
        return Err(Error::Domain(format!("non-positive sample ({x}, {y})")));
    }
    let n = samples.len() as f64;
    let lx: Vec<f64> = samples.iter().map(|s| s.0.ln()).collect();
    let ly: Vec<f64> = samples.iter().map(|s| s.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ly.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Domain("all x values coincide".into()));
    }
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0)
    };
    Ok(GrowthFit {
        slope,
        intercept: my - slope * mx,
        r_squared,
        sample_count: samples.len(),
    })
}

/// ∫_{τ2}^{τ1} J_m²(m r) r dr / J_m²(m τ1).
pub fn integral_estimate_lhs(m: u32, tau2: f64, tau1: f64) -> Result<f64> {
    if !(0.0 <= tau2 && tau2 < tau1) {
        return Err(Error::Domain(format!("need 0 <= tau2 < tau1, got ({tau2}, {tau1})")));
    }
    let mf = m as f64;
    let mut failure = None;
    let q = quadrature_1d(
        |r| match bessel_j(m, mf * r) {
            Ok(j) => j * j * r,
            Err(e) => {
                failure = Some(e);
                0.0
            }
        },
        tau2,
        tau1,
        // the integrand only oscillates beyond r = 1
        mf * (tau1 - 1.0).max(0.0) / std::f64::consts::PI + 4.0,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let end = bessel_j(m, mf * tau1)?;
    Ok(q.value / (end * end))
}

/// Left-hand side at m together with its local decay exponent d log(lhs) / d log m,
/// estimated by a centered difference over m(1 ± 5%).
///
/// `tau1_of` maps m to the upper limit, so that m-dependent limits such as
/// 1 + c m^{-2/3} are followed consistently.
pub fn integral_estimate_check<F>(m: u32, tau2: f64, tau1_of: F) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let mf = m as f64;
    let lhs = integral_estimate_lhs(m, tau2, tau1_of(mf))?;
    let lo = (0.95 * mf).round().max(1.0);
    let hi = (1.05 * mf).round().max(lo + 1.0);
    let a = integral_estimate_lhs(lo as u32, tau2, tau1_of(lo))?;
    let b = integral_estimate_lhs(hi as u32, tau2, tau1_of(hi))?;
    Ok((lhs, (b / a).ln() / (hi / lo).ln()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_cube() {
        let s: Vec<(f64, f64)> = (1..8).map(|i| (i as f64, (i as f64).powi(3))).collect();
        let f = growth_order_fit(&s).unwrap();
        assert!((f.slope - 3.0).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_samples() {
        assert!(growth_order_fit(&[(1.0, 1.0), (2.0, 2.0)]).is_err());
        assert!(growth_order_fit(&[(1.0, 1.0), (2.0, -2.0), (3.0, 1.0)]).is_err());
    }
}
