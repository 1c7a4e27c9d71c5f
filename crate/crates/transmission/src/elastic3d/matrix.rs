use nalgebra::DMatrix;
use num_complex::Complex64;

use super::harmonics::{spherical_harmonic, Harmonic};
use super::GENERIC_ANGLES;
use crate::elastic2d::{wavenumbers, LameParameters};
use crate::specfun::spherical_bessel_triple;
use crate::{roots, Error, Result};

/// Entry layout of the 6×6 boundary system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    /// Rows 5 and 6 without the traction correction.
    Uncorrected,
    /// Rows 5 and 6 recomputed from the traction of each ansatz term.
    Corrected,
}

struct Radial {
    k: f64,
    j: f64,
    jp: f64,
    jpp: f64,
}

impl Radial {
    fn new(m: u32, k: f64) -> Result<Self> {
        let (j, jp, jpp) = spherical_bessel_triple(m, k)?;
        Ok(Self { k, j, jp, jpp })
    }

    /// j + k j', the radial factor of ∇×∇×(x j Y) in the tangential directions.
    fn curl2(&self) -> f64 {
        self.j + self.k * self.jp
    }

    /// k j' - j.
    fn shear(&self) -> f64 {
        self.k * self.jp - self.j
    }
}

fn check_angle(m: u32, n: i32, theta: f64, phi: f64) -> Result<Harmonic> {
    let h = spherical_harmonic(m, n, theta, phi)?;
    // sup of each quantity over the sphere, bounded crudely by sampling
    let mut sup = [0.0f64; 3];
    for i in 1..64 {
        let t = std::f64::consts::PI * i as f64 / 64.0;
        let g = spherical_harmonic(m, n, t, 0.0)?;
        sup[0] = sup[0].max(g.y.norm());
        sup[1] = sup[1].max(g.d_theta.norm());
        sup[2] = sup[2].max(g.d_phi.norm());
    }
    let vals = [h.y.norm(), h.d_theta.norm(), h.d_phi.norm()];
    if vals.iter().zip(&sup).any(|(v, s)| *v <= 1e-3 * s) {
        return Err(Error::DegenerateAngle { theta, phi });
    }
    Ok(h)
}

/// Three columns (∇(jY), ∇×∇×(x jY), ∇×(x jY)) for one medium; `j_extra` is the
/// lone j_m value the uncorrected A₆,₃ and A₆,₆ add to the curl column.
#[allow(clippy::too_many_arguments)]
fn block(
    layout: Layout,
    m: u32,
    n: i32,
    h: &Harmonic,
    theta: f64,
    lambda: f64,
    mu: f64,
    p: &Radial,
    s: &Radial,
    j_extra: f64,
) -> [[Complex64; 3]; 6] {
    let l = (m * (m + 1)) as f64;
    let (sin, cos) = theta.sin_cos();
    let cot = cos / sin;
    let (y, yt, yf) = (h.y, h.d_theta, h.d_phi);
    let yff = h.d_phi2(n);
    let z = Complex64::new(0.0, 0.0);
    let mut a = [[z; 3]; 6];
    a[0] = [y * (p.k * p.jp), y * (l * s.j), z];
    a[1] = [yt * p.j, yt * s.curl2(), yf * (s.j / sin)];
    a[2] = [yf * (p.j / sin), yf * (s.curl2() / sin), -yt * s.j];
    let k1 = p.k;
    a[3] = [
        y * (2.0 * mu * k1 * k1 * p.jpp - lambda * k1 * k1 * p.j),
        y * (2.0 * mu * l * s.shear()),
        z,
    ];
    match layout {
        Layout::Uncorrected => {
            let k2 = s.k;
            let bracket = |kk: f64| yt / (sin * sin) + yt * kk + yff * (2.0 * cot / (sin * sin));
            a[4] = [
                yt * (2.0 * mu * p.shear()),
                (-yt * s.curl2() + bracket(l) * s.j) * (2.0 * mu) + bracket(k2 * k2) * (mu * s.j),
                -(yf * (2.0 * s.j) + yt * s.curl2()) * (mu / sin),
            ];
            a[5] = [
                yf * (2.0 * mu * p.shear() / sin),
                yf * (mu / sin * (2.0 * l * s.j - s.curl2() + k2 * k2 * s.j)),
                yt * (mu * (2.0 * j_extra + s.curl2())),
            ];
        }
        Layout::Corrected => {
            let k2 = s.k;
            let p_shear = mu * (k2 * k2 * s.jpp + (l - 2.0) * s.j);
            a[4] = [
                yt * (2.0 * mu * p.shear()),
                yt * p_shear,
                yf * (mu * s.shear() / sin),
            ];
            a[5] = [
                yf * (2.0 * mu * p.shear() / sin),
                yf * (p_shear / sin),
                -yt * (mu * s.shear()),
            ];
        }
    }
    a
}

/// The 6×6 boundary matrix at the angle (θ₀, φ₀).
///
/// Columns 1–3 act on (a, c, b) and columns 4–6 on (-d, -f, -e): the
/// gradient, double-curl and curl terms of u and of v. Rows are the
/// displacement components (r, θ, φ) followed by the traction components.
pub fn assemble_a(
    layout: Layout,
    m: u32,
    n_deg: i32,
    omega: f64,
    params: &LameParameters,
    theta0: f64,
    phi0: f64,
) -> Result<DMatrix<Complex64>> {
    if m == 0 {
        return Err(Error::Domain("angular order must be >= 1".into()));
    }
    if n_deg == 0 || n_deg.unsigned_abs() > m {
        return Err(Error::Domain(format!("need 0 < |n| <= m, got n = {n_deg}")));
    }
    if !(omega > 0.0) {
        return Err(Error::Domain(format!("omega = {omega} must be positive")));
    }
    let h = check_angle(m, n_deg, theta0, phi0)?;
    let w = wavenumbers(omega, params);
    let (lambda, mu) = (params.lambda, params.mu);
    let u = block(
        layout,
        m,
        n_deg,
        &h,
        theta0,
        lambda,
        mu,
        &Radial::new(m, w.k1)?,
        &Radial::new(m, w.k2)?,
        spherical_bessel_triple(m, w.k1)?.0,
    );
    // the uncorrected A₆,₆ pairs its lone j_m with k̃₂ where A₆,₃ uses k₁
    let v = block(
        layout,
        m,
        n_deg,
        &h,
        theta0,
        lambda,
        mu,
        &Radial::new(m, w.k1_tilde)?,
        &Radial::new(m, w.k2_tilde)?,
        spherical_bessel_triple(m, w.k2_tilde)?.0,
    );
    let mut a = DMatrix::zeros(6, 6);
    for i in 0..6 {
        for j in 0..3 {
            a[(i, j)] = u[i][j];
            a[(i, j + 3)] = v[i][j];
        }
    }
    Ok(a)
}

/// Builds the matrix at the first non-degenerate default angle.
pub(crate) fn assemble_generic(
    layout: Layout,
    m: u32,
    n_deg: i32,
    omega: f64,
    params: &LameParameters,
) -> Result<(DMatrix<Complex64>, usize)> {
    let mut last = None;
    for (i, &(t, p)) in GENERIC_ANGLES.iter().enumerate() {
        match assemble_a(layout, m, n_deg, omega, params, t, p) {
            Ok(a) => return Ok((a, i)),
            Err(e @ Error::DegenerateAngle { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap())
}

/// Smallest root of det(A) on (lo, hi) at a fixed angle.
///
/// det(A) factors into an angular constant times a real function of ω, so the
/// determinant is rotated by its phase at the best-conditioned of a few samples
/// and the real part is searched.
pub fn det_a_root(
    layout: Layout,
    m: u32,
    n_deg: i32,
    params: &LameParameters,
    angle: (f64, f64),
    lo: f64,
    hi: f64,
) -> Result<f64> {
    let det = |omega: f64| -> Result<Complex64> {
        Ok(assemble_a(layout, m, n_deg, omega, params, angle.0, angle.1)?.determinant())
    };
    let mut best = Complex64::new(0.0, 0.0);
    for i in 1..=16 {
        let d = det(lo + (hi - lo) * i as f64 / 17.0)?;
        if d.norm() > best.norm() {
            best = d;
        }
    }
    if best.norm() == 0.0 {
        return Err(Error::DegenerateMode);
    }
    let phase = best.conj() / best.norm();
    roots::smallest_root(|omega| Ok((det(omega)? * phase).re), lo, hi)
}
