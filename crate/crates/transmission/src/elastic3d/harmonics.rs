use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// Fully normalized associated Legendre values
/// sqrt((2l+1)/4π · (l-k)!/(l+k)!) P_l^k(cos θ) for l = k..=m, Condon–Shortley phase included.
fn normalized_column(m: u32, k: u32, theta: f64) -> Vec<f64> {
    let (s, c) = theta.sin_cos();
    let mut diag = 1.0 / (4.0 * PI).sqrt();
    for j in 1..=k {
        let jf = j as f64;
        diag *= -((2.0 * jf + 1.0) / (2.0 * jf)).sqrt() * s;
    }
    let mut out = vec![diag];
    if m == k {
        return out;
    }
    let kf = k as f64;
    out.push(c * (2.0 * kf + 3.0).sqrt() * diag);
    for l in (k + 2)..=m {
        let lf = l as f64;
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - kf * kf)).sqrt();
        let lp = lf - 1.0;
        let a_prev = ((4.0 * lp * lp - 1.0) / (lp * lp - kf * kf)).sqrt();
        let n = out.len();
        out.push(a * (c * out[n - 1] - out[n - 2] / a_prev));
    }
    out
}

/// sqrt((2m+1)/4π · (m-k)!/(m+k)!) P_m^k(cos θ), 0 <= k <= m.
pub fn normalized_legendre(m: u32, k: u32, theta: f64) -> Result<f64> {
    if k > m {
        return Err(Error::Domain(format!("order {k} exceeds degree {m}")));
    }
    Ok(*normalized_column(m, k, theta).last().unwrap())
}

/// Associated Legendre function P_m^k(x) with the Condon–Shortley phase, |x| <= 1.
pub fn associated_legendre(m: u32, k: u32, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [-1, 1]")));
    }
    let p = normalized_legendre(m, k, x.acos())?;
    let mut ratio = 1.0;
    for j in (m - k + 1)..=(m + k) {
        ratio *= j as f64;
    }
    Ok(p * (4.0 * PI / (2.0 * m as f64 + 1.0) * ratio).sqrt())
}

/// Y_m^n together with its first angular derivatives at (θ, φ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonic {
    pub y: Complex64,
    pub d_theta: Complex64,
    pub d_phi: Complex64,
}

impl Harmonic {
    /// ∂²_φ Y = -n² Y.
    pub fn d_phi2(&self, n: i32) -> Complex64 {
        -self.y * (n * n) as f64
    }
}

/// Y_m^n(θ, φ) = sqrt((2m+1)/4π · (m-|n|)!/(m+|n|)!) P_m^{|n|}(cos θ) e^{inφ}.
///
/// ∂_θ uses sin θ dP_m/dθ = m cos θ P_m - (m+|n|) P_{m-1}, so θ must avoid the poles.
pub fn spherical_harmonic(m: u32, n: i32, theta: f64, phi: f64) -> Result<Harmonic> {
    let k = n.unsigned_abs();
    if k > m {
        return Err(Error::Domain(format!("|n| = {k} exceeds m = {m}")));
    }
    let (s, c) = theta.sin_cos();
    if s.abs() < 1e-12 {
        return Err(Error::DegenerateAngle { theta, phi });
    }
    let col = normalized_column(m, k, theta);
    let p = col[col.len() - 1];
    let below = if m > k { col[col.len() - 2] } else { 0.0 };
    let (mf, kf) = (m as f64, k as f64);
    let coupling = if m > k {
        ((2.0 * mf + 1.0) / (2.0 * mf - 1.0) * (mf - kf) * (mf + kf)).sqrt()
    } else {
        0.0
    };
    let dp = (mf * c * p - coupling * below) / s;
    let e = Complex64::from_polar(1.0, n as f64 * phi);
    let y = e * p;
    Ok(Harmonic {
        y,
        d_theta: e * dp,
        d_phi: Complex64::new(0.0, n as f64) * y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_closed_forms() {
        let t: f64 = 0.8;
        let (s, c) = t.sin_cos();
        let y10 = (3.0 / (4.0 * PI)).sqrt() * c;
        assert!((normalized_legendre(1, 0, t).unwrap() - y10).abs() < 1e-15);
        let y11 = -(3.0 / (8.0 * PI)).sqrt() * s;
        assert!((normalized_legendre(1, 1, t).unwrap() - y11).abs() < 1e-15);
        let p22 = 3.0 * s * s;
        assert!((associated_legendre(2, 2, c).unwrap() - p22).abs() < 1e-13);
        let p31 = -1.5 * (5.0 * c * c - 1.0) * s;
        assert!((associated_legendre(3, 1, c).unwrap() - p31).abs() < 1e-13);
    }

    #[test]
    fn theta_derivative_matches_differences() {
        for &(m, n) in &[(1u32, 0i32), (4, 2), (9, -3), (12, 12)] {
            let (t, p, h) = (1.1, 0.7, 1e-5);
            let d = spherical_harmonic(m, n, t, p).unwrap().d_theta;
            let fd = (spherical_harmonic(m, n, t + h, p).unwrap().y - spherical_harmonic(m, n, t - h, p).unwrap().y)
                / (2.0 * h);
            assert!((d - fd).norm() < 1e-8, "({m}, {n}): {d} vs {fd}");
        }
    }
}
