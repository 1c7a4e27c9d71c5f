//! Cartesian derivatives of the scalar potential J_m(k r) e^{i m θ}.

use num_complex::Complex64;

use crate::specfun::bessel_j_triple;
use crate::Result;

pub type C2 = [Complex64; 2];
pub type C22 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Gradient and Hessian of f = J_m(k r) e^{i m θ} in Cartesian components.
#[derive(Debug, Clone, Copy)]
pub struct Jet {
    pub grad: C2,
    pub hess: C22,
    /// Gradient of Δf, computed from the third radial derivative.
    pub grad_laplacian: C2,
}

fn rotate_vec(v: C2, c: f64, s: f64) -> C2 {
    [v[0] * c - v[1] * s, v[0] * s + v[1] * c]
}

fn rotate_mat(h: C22, c: f64, s: f64) -> C22 {
    // Q H Q^T with Q = [[c, -s], [s, c]]
    let q = [[c, -s], [s, c]];
    let mut out = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = ZERO;
            for a in 0..2 {
                for b in 0..2 {
                    acc += q[i][a] * h[a][b] * q[j][b];
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Radial data independent of θ, so that sweeps over θ reuse one Bessel call.
#[derive(Debug, Clone, Copy)]
pub struct RadialJet {
    m: u32,
    k: f64,
    r: f64,
    grad: C2,
    hess: C22,
    grad_laplacian: C2,
}

impl RadialJet {
    pub fn new(m: u32, k: f64, r: f64) -> Result<Self> {
        let mf = m as f64;
        if r == 0.0 {
            let mut grad = [ZERO; 2];
            let mut hess = [[ZERO; 2]; 2];
            if m == 1 {
                grad = [Complex64::new(0.5 * k, 0.0), I * (0.5 * k)];
            }
            if m == 2 {
                let q = 0.25 * k * k;
                hess = [[Complex64::new(q, 0.0), I * q], [I * q, Complex64::new(-q, 0.0)]];
            }
            // Δf = -k² f, whose gradient at the origin is -k² grad f
            let grad_laplacian = [grad[0] * (-k * k), grad[1] * (-k * k)];
            return Ok(Self {
                m,
                k,
                r,
                grad,
                hess,
                grad_laplacian,
            });
        }
        let x = k * r;
        let (j, jp, jpp) = bessel_j_triple(m, x)?;
        let jppp = -jpp / x + jp / (x * x) + (mf * mf / (x * x) - 1.0) * jp - 2.0 * mf * mf * j / (x * x * x);
        let im = I * mf;
        let grad = [Complex64::new(k * jp, 0.0), im * (j / r)];
        let h_rt = im * (k * jp / r - j / (r * r));
        let hess = [
            [Complex64::new(k * k * jpp, 0.0), h_rt],
            [h_rt, Complex64::new(k * jp / r - mf * mf * j / (r * r), 0.0)],
        ];
        let lap = k * k * jpp + k * jp / r - mf * mf * j / (r * r);
        let lap_r = k * k * k * jppp + k * k * jpp / r - k * jp / (r * r) - mf * mf * k * jp / (r * r)
            + 2.0 * mf * mf * j / (r * r * r);
        let grad_laplacian = [Complex64::new(lap_r, 0.0), im * (lap / r)];
        Ok(Self {
            m,
            k,
            r,
            grad,
            hess,
            grad_laplacian,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Cartesian jet at angle θ.
    pub fn at(&self, theta: f64) -> Jet {
        let phase = Complex64::from_polar(1.0, self.m as f64 * theta);
        if self.r == 0.0 {
            // already Cartesian; the phase is absorbed by x + i y
            return Jet {
                grad: self.grad,
                hess: self.hess,
                grad_laplacian: self.grad_laplacian,
            };
        }
        let (s, c) = theta.sin_cos();
        let g = rotate_vec(self.grad, c, s);
        let h = rotate_mat(self.hess, c, s);
        let gl = rotate_vec(self.grad_laplacian, c, s);
        Jet {
            grad: [g[0] * phase, g[1] * phase],
            hess: [[h[0][0] * phase, h[0][1] * phase], [h[1][0] * phase, h[1][1] * phase]],
            grad_laplacian: [gl[0] * phase, gl[1] * phase],
        }
    }
}
