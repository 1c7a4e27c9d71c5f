use std::f64::consts::PI;

use num_complex::Complex64;

use super::field::{RadialJet, C2, C22};
use super::params::{wavenumbers, LameParameters, Wavenumbers};
use super::system::{boundary_matrix, det_fm};
use crate::linalg::{equilibrated_nullvector, fix_phase, relative_residual, row_norm_product};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    U,
    V,
}

/// Whole field, its compressional (gradient) part or its shear (curl) part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    Total,
    P,
    S,
}

/// A 2D transmission eigen-pair of angular order m.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskEigenMode {
    pub m: u32,
    pub omega: f64,
    pub params: LameParameters,
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
    pub wavenumbers: Wavenumbers,
    /// Smallest over largest singular value of the column-equilibrated matrix.
    pub sv_ratio: f64,
    /// |det| over the product of row norms.
    pub det_ratio: f64,
    /// ‖A c‖ / (‖A‖ ‖c‖) at the returned coefficients.
    pub residual: f64,
}

/// Certified coefficients (α, β, γ, δ) of the eigen-pair at ω.
pub fn solve_coefficients(m: u32, omega: f64, params: &LameParameters) -> Result<DiskEigenMode> {
    let mode = DiskEigenMode::from_nullvector(m, omega, params)?;
    if mode.sv_ratio >= 1e-6 || mode.det_ratio > 1e-7 {
        return Err(Error::NotAnEigenvalue {
            ratio: mode.sv_ratio,
        });
    }
    Ok(mode)
}

impl DiskEigenMode {
    /// Nullvector-based mode at any ω, without the eigenvalue certificate.
    pub fn from_nullvector(m: u32, omega: f64, params: &LameParameters) -> Result<Self> {
        let a = boundary_matrix(m, omega, params)?;
        let (mut x, sv_ratio) = equilibrated_nullvector(&a);
        fix_phase(&mut x, 0);
        let residual = relative_residual(&a, &x);
        let det = det_fm(m, omega, params)?;
        Ok(Self {
            m,
            omega,
            params: *params,
            alpha: x[0],
            gamma: x[1],
            beta: x[2],
            delta: x[3],
            wavenumbers: wavenumbers(omega, params),
            sv_ratio,
            det_ratio: det.abs() / row_norm_product(&a),
            residual,
        })
    }

    /// Same mode with all coefficients multiplied by `s`.
    pub fn scaled(&self, s: f64) -> Self {
        let mut out = self.clone();
        out.alpha *= s;
        out.beta *= s;
        out.gamma *= s;
        out.delta *= s;
        out
    }

    /// Gradient-potential and curl-potential (coefficient, wavenumber) for a side.
    pub fn potentials(&self, side: Side) -> ((Complex64, f64), (Complex64, f64)) {
        let w = &self.wavenumbers;
        match side {
            Side::U => ((self.alpha, w.k1), (self.gamma, w.k2)),
            Side::V => ((self.beta, w.k1_tilde), (self.delta, w.k2_tilde)),
        }
    }

    /// Density of the medium on a side.
    pub fn density(&self, side: Side) -> f64 {
        match side {
            Side::U => self.params.rho,
            Side::V => self.params.rho_tilde,
        }
    }

    /// Evaluator caching the Bessel data at radius r.
    pub fn at_radius(&self, side: Side, r: f64) -> Result<RadialField> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain(format!("r = {r} outside [0, 1]")));
        }
        self.at_radius_unchecked(side, r)
    }

    /// As `at_radius` without the range check; the fields extend analytically past r = 1.
    pub fn at_radius_unchecked(&self, side: Side, r: f64) -> Result<RadialField> {
        let ((cp, kp), (cs, ks)) = self.potentials(side);
        Ok(RadialField {
            cp,
            cs,
            p: RadialJet::new(self.m, kp, r)?,
            s: RadialJet::new(self.m, ks, r)?,
        })
    }

    /// Displacement in Cartesian components at polar point (r, θ).
    pub fn eval(&self, side: Side, r: f64, theta: f64) -> Result<C2> {
        Ok(self.at_radius(side, r)?.displacement(Part::Total, theta))
    }

    /// Displacement of one part of the Helmholtz decomposition.
    pub fn eval_part(&self, side: Side, part: Part, r: f64, theta: f64) -> Result<C2> {
        Ok(self.at_radius(side, r)?.displacement(part, theta))
    }

    /// Cartesian Jacobian J[i][j] = ∂_j u_i.
    pub fn gradient(&self, side: Side, part: Part, r: f64, theta: f64) -> Result<C22> {
        Ok(self.at_radius(side, r)?.jacobian(part, theta))
    }

    /// Cauchy stress λ tr(ε) I + 2μ ε.
    pub fn stress(&self, side: Side, r: f64, theta: f64) -> Result<C22> {
        let g = self.gradient(side, Part::Total, r, theta)?;
        Ok(stress_from_gradient(&g, self.params.lambda, self.params.mu))
    }

    /// Compressional and shear parts recovered from the total field by the
    /// operators -∇(∇·w)/k_p² and (∂y rot w, -∂x rot w)/k_s².
    pub fn decompose_by_operators(&self, side: Side, r: f64, theta: f64) -> Result<(C2, C2)> {
        let f = self.at_radius(side, r)?;
        Ok(f.operator_parts(theta))
    }

    /// Max relative mismatch of displacement and traction over 128 boundary points.
    pub fn boundary_residual(&self) -> Result<f64> {
        let u = self.at_radius(Side::U, 1.0)?;
        let v = self.at_radius(Side::V, 1.0)?;
        let (lambda, mu) = (self.params.lambda, self.params.mu);
        let mut worst: f64 = 0.0;
        for i in 0..128 {
            let theta = 2.0 * PI * i as f64 / 128.0;
            let du = u.displacement(Part::Total, theta);
            let dv = v.displacement(Part::Total, theta);
            worst = worst.max(mismatch(&du, &dv));
            let normal = [theta.cos(), theta.sin()];
            let tu = traction(&stress_from_gradient(&u.jacobian(Part::Total, theta), lambda, mu), normal);
            let tv = traction(&stress_from_gradient(&v.jacobian(Part::Total, theta), lambda, mu), normal);
            worst = worst.max(mismatch(&tu, &tv));
        }
        Ok(worst)
    }
}

fn norm2(v: &C2) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

fn mismatch(a: &C2, b: &C2) -> f64 {
    let diff = [a[0] - b[0], a[1] - b[1]];
    let scale = norm2(a).max(norm2(b));
    if scale == 0.0 {
        0.0
    } else {
        norm2(&diff) / scale
    }
}

fn traction(sigma: &C22, normal: [f64; 2]) -> C2 {
    [
        sigma[0][0] * normal[0] + sigma[0][1] * normal[1],
        sigma[1][0] * normal[0] + sigma[1][1] * normal[1],
    ]
}

pub fn stress_from_gradient(g: &C22, lambda: f64, mu: f64) -> C22 {
    let tr = g[0][0] + g[1][1];
    let mut s = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let eps = 0.5 * (g[i][j] + g[j][i]);
            s[i][j] = 2.0 * mu * eps;
        }
        s[i][i] += lambda * tr;
    }
    s
}

/// Frobenius contraction Re(σ : conj(G)).
pub fn energy_density(sigma: &C22, g: &C22) -> Complex64 {
    let mut acc = ZERO;
    for i in 0..2 {
        for j in 0..2 {
            acc += sigma[i][j] * g[i][j].conj();
        }
    }
    acc
}

/// Mode data at a fixed radius for one side.
#[derive(Debug, Clone, Copy)]
pub struct RadialField {
    cp: Complex64,
    cs: Complex64,
    p: RadialJet,
    s: RadialJet,
}

impl RadialField {
    pub fn displacement(&self, part: Part, theta: f64) -> C2 {
        let mut out = [ZERO; 2];
        if part != Part::S {
            let g = self.p.at(theta).grad;
            out[0] += self.cp * g[0];
            out[1] += self.cp * g[1];
        }
        if part != Part::P {
            // curl f = (-∂y f, ∂x f)
            let g = self.s.at(theta).grad;
            out[0] -= self.cs * g[1];
            out[1] += self.cs * g[0];
        }
        out
    }

    pub fn jacobian(&self, part: Part, theta: f64) -> C22 {
        let mut out = [[ZERO; 2]; 2];
        if part != Part::S {
            let h = self.p.at(theta).hess;
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] += self.cp * h[i][j];
                }
            }
        }
        if part != Part::P {
            let h = self.s.at(theta).hess;
            out[0][0] -= self.cs * h[1][0];
            out[0][1] -= self.cs * h[1][1];
            out[1][0] += self.cs * h[0][0];
            out[1][1] += self.cs * h[0][1];
        }
        out
    }

    fn operator_parts(&self, theta: f64) -> (C2, C2) {
        // ∇·w only sees the gradient potential and rot w only the curl potential;
        // the cross terms cancel identically by symmetry of mixed derivatives
        let kp = self.p.k();
        let ks = self.s.k();
        let gl = self.p.at(theta).grad_laplacian;
        let p = [gl[0] * (-self.cp / (kp * kp)), gl[1] * (-self.cp / (kp * kp))];
        // rot(curl f) = Δf
        let gr = self.s.at(theta).grad_laplacian;
        let s = [gr[1] * (self.cs / (ks * ks)), gr[0] * (-self.cs / (ks * ks))];
        (p, s)
    }
}
