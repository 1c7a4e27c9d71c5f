use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use transmission::elastic2d::*;
use transmission::specfun::*;
use transmission::Error;

fn reference_mode(m: u32) -> DiskEigenMode {
    let p = LameParameters::reference();
    let w = find_eigenvalue(&bracket_bi(m, 1, &p).unwrap(), m, &p).unwrap();
    solve_coefficients(m, w, &p).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs()
}

#[test]
fn wavenumber_formulas() {
    let w = wavenumbers(1.0, &LameParameters::reference());
    assert!(close(w.k1, 1.0 / 3f64.sqrt(), 1e-15));
    assert!(close(w.k2, 1.0, 1e-15));
    assert!(close(w.k1_tilde, (20.0f64 / 3.0).sqrt(), 1e-15));
    assert!(close(w.k2_tilde, 20f64.sqrt(), 1e-15));
    let w = wavenumbers(2.19, &LameParameters::reference());
    assert!((w.k2_tilde - 9.794).abs() < 1e-3);
}

#[test]
fn parameter_validation() {
    assert!(LameParameters::new(1.0, 0.0, 1.0, 2.0, 2).is_err());
    assert!(LameParameters::new(-1.0, 1.0, 1.0, 2.0, 2).is_err());
    assert!(LameParameters::new(-1.0, 1.0, 1.0, 2.0, 3).is_ok());
    assert!(LameParameters::new(1.0, 1.0, 2.0, 2.0, 2).is_err());
}

#[test]
fn matrix_entry_types() {
    for (m, omega) in [(1, 0.7), (4, 2.19), (13, 4.4), (30, 9.0)] {
        let a = boundary_matrix(m, omega, &LameParameters::reference()).unwrap();
        assert_eq!(a[(0, 0)].im, 0.0);
        assert_eq!(a[(1, 1)].im, 0.0);
        assert_eq!(a[(0, 1)].re, 0.0);
        assert_eq!(a[(1, 0)].re, 0.0);
    }
}

#[test]
fn identical_media_are_singular() {
    let p = LameParameters {
        rho_tilde: 1.0,
        ..LameParameters::reference()
    };
    let a = boundary_matrix(5, 3.3, &p).unwrap();
    for i in 0..4 {
        for j in 0..2 {
            assert!((a[(i, j)] + a[(i, j + 2)]).norm() <= 1e-14 * a[(i, j)].norm().max(1.0));
        }
    }
    assert!(a.determinant().norm() < 1e-10);
}

#[test]
fn near_eigenvalue_determinant_is_small() {
    let p = LameParameters::reference();
    let w = find_eigenvalue(&bracket_bi(4, 1, &p).unwrap(), 4, &p).unwrap();
    assert!(reference_mode(4).det_ratio < 1e-7);
    let off = DiskEigenMode::from_nullvector(4, 0.98 * w, &p).unwrap();
    assert!(off.det_ratio > 5e-5 && off.sv_ratio > 1e-3);
}

#[test]
fn bracket_examples() {
    let p = LameParameters::reference();
    let b = bracket_bi(4, 1, &p).unwrap();
    assert!((b.lo - 1.697).abs() < 1e-3 && (b.hi - 2.474).abs() < 1e-3);
    assert!(b.contains(2.19));
    assert!(det_fm(4, b.lo, &p).unwrap() * det_fm(4, b.hi, &p).unwrap() < 0.0);
    assert!(bracket_bi(8, 1, &p).unwrap().contains(3.21));

    let b = bracket_mono(30, 0.3, 0.8, &p).unwrap();
    assert_eq!(b.kind, BracketKind::Mono { s1: 2, s2: 15 });
    assert_eq!(b.lo, bessel_zero(30, 2).unwrap());
    assert_eq!(b.hi, bessel_zero(30, 15).unwrap());
    let stiff = LameParameters { mu: 4.0, ..p };
    let b4 = bracket_mono(30, 0.3, 0.8, &stiff).unwrap();
    assert!(close(b4.lo, 2.0 * b.lo, 1e-15) && close(b4.hi, 2.0 * b.hi, 1e-15));
    assert!(matches!(bracket_mono(3, 0.3, 0.35, &p), Err(Error::DegenerateBracket(_))));
}

#[test]
fn bracket_lower_ends_approach_the_leading_term() {
    let p = LameParameters::reference();
    let ratio = |m: u32| bracket_mono(m, 0.3, 0.8, &p).unwrap().lo / m as f64;
    assert!(ratio(200) - 1.0 < ratio(50) - 1.0);
    let bi = |m: u32| bracket_bi(m, 1, &p).unwrap().lo * p.contrast() / m as f64;
    assert!(bi(200) - 1.0 < bi(20) - 1.0);
}

#[test]
fn eigenvalue_examples() {
    let p = LameParameters::reference();
    for (m, want, tol) in [(4, 2.19, 0.01), (13, 4.46, 0.02)] {
        let b = bracket_bi(m, 1, &p).unwrap();
        let w = find_eigenvalue(&b, m, &p).unwrap();
        assert!((w - want).abs() <= tol, "m={m}: {w}");
        assert!(b.lo < w && w < b.hi);
        assert!(det_fm(m, w - 1e-6, &p).unwrap() * det_fm(m, w + 1e-6, &p).unwrap() < 0.0);
    }
}

#[test]
fn coefficient_structure() {
    for m in [4, 13, 27] {
        let mode = reference_mode(m);
        let c = [mode.alpha, mode.gamma, mode.beta, mode.delta];
        let norm: f64 = c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
        assert_eq!(mode.alpha.im, 0.0);
        assert!(mode.alpha.re >= 0.0);
        // γ is a purely imaginary multiple of α
        let cross = mode.alpha * mode.gamma.conj();
        assert!(cross.re.abs() <= 1e-14 * cross.norm());
        assert!(mode.residual <= 1e-8);
        assert!(mode.sv_ratio < 1e-6);
        assert!(mode.boundary_residual().unwrap() <= 1e-6);
    }
}

#[test]
#[ignore = "the closed-form coefficients make gamma/alpha purely imaginary, so Im(alpha conj(gamma)) = |alpha gamma| != 0"]
fn cross_term_vanishes_for_bi_modes() {
    let mode = reference_mode(13);
    let cross = mode.alpha * mode.gamma.conj();
    assert!(cross.im.abs() <= 1e-12 * cross.norm(), "{cross}");
}

#[test]
fn gamma_over_alpha_closed_form() {
    // γ/α = -i n/(n²-1) (k₁/m) J_m(k₁)/J_m(k₂) (n J'_m(k₁)/J_m(k₁) - J'_m(k₁n)/J_m(k₁n))
    let p = LameParameters::reference();
    let mode = reference_mode(13);
    let k = mode.wavenumbers;
    let n = p.contrast();
    let (a1, a1p) = (bessel_j(13, k.k1).unwrap(), bessel_j_prime(13, k.k1).unwrap());
    let (b1, b1p) = (bessel_j(13, k.k1 * n).unwrap(), bessel_j_prime(13, k.k1 * n).unwrap());
    let a2 = bessel_j(13, k.k2).unwrap();
    let want = -Complex64::i() * n / (n * n - 1.0) * k.k1 / 13.0 * a1 / a2 * (n * a1p / a1 - b1p / b1);
    let got = mode.gamma / mode.alpha;
    assert!((got - want).norm() <= 1e-6 * want.norm());
}

#[test]
fn perturbations_break_the_boundary_conditions() {
    let mode = reference_mode(4);
    let p = LameParameters::reference();
    let off = DiskEigenMode::from_nullvector(4, 1.01 * mode.omega, &p).unwrap();
    assert!(off.boundary_residual().unwrap() > 1e-3);
    // the relative mismatch saturates for large bumps, so probe the linear regime
    let bump = |f: f64| {
        let mut b = mode.clone();
        b.alpha *= 1.0 + f;
        b.boundary_residual().unwrap()
    };
    let (r1, r2) = (bump(1e-3), bump(2e-3));
    assert!(r1 > 1e-3 && (r2 / r1 - 2.0).abs() < 0.05, "{r1} {r2}");
}

#[test]
fn boundary_continuity_at_64_angles() {
    for m in [4, 13] {
        let mode = reference_mode(m);
        for i in 0..64 {
            let t = 2.0 * PI * i as f64 / 64.0;
            let u = mode.eval(Side::U, 1.0, t).unwrap();
            let v = mode.eval(Side::V, 1.0, t).unwrap();
            let d = ((u[0] - v[0]).norm_sqr() + (u[1] - v[1]).norm_sqr()).sqrt();
            let s = (u[0].norm_sqr() + u[1].norm_sqr()).sqrt();
            assert!(d <= 1e-6 * s);
        }
    }
}

#[test]
fn angular_phase_symmetry() {
    let mode = reference_mode(8);
    for (r, t) in [(0.3, 0.2), (0.8, 1.9), (1.0, 4.0)] {
        let a = mode.eval(Side::U, r, t).unwrap();
        let b = mode.eval(Side::U, r, t + PI / 8.0).unwrap();
        // rotating by π/m multiplies the scalar potentials by -1 and rotates the vector
        let (s, c) = (PI / 8.0).sin_cos();
        let rotated = [c * a[0] - s * a[1], s * a[0] + c * a[1]];
        for i in 0..2 {
            assert!((b[i] + rotated[i]).norm() <= 1e-12 * (a[0].norm() + a[1].norm()));
        }
    }
}

#[test]
fn rejects_points_outside_the_disk() {
    let mode = reference_mode(4);
    assert!(mode.eval(Side::U, 1.2, 0.0).is_err());
    assert!(mode.eval(Side::U, -0.1, 0.0).is_err());
}

#[test]
fn origin_limits() {
    let mode = reference_mode(4);
    let u = mode.eval(Side::V, 0.0, 0.3).unwrap();
    assert_eq!(u[0].norm() + u[1].norm(), 0.0);
    let p = LameParameters::reference();
    let w = find_eigenvalue(&bracket_bi(1, 1, &p).unwrap(), 1, &p);
    if let Ok(w) = w {
        let mode = DiskEigenMode::from_nullvector(1, w, &p).unwrap();
        let near = mode.eval(Side::U, 1e-7, 0.3).unwrap();
        let at = mode.eval(Side::U, 0.0, 0.3).unwrap();
        for i in 0..2 {
            assert!((near[i] - at[i]).norm() <= 1e-5 * (at[0].norm() + at[1].norm()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wavenumbers_are_homogeneous(omega in 0.1f64..20.0, c in 0.1f64..10.0) {
        let p = LameParameters::reference();
        let (a, b) = (wavenumbers(omega, &p), wavenumbers(c * omega, &p));
        for (x, y) in [(a.k1, b.k1), (a.k2, b.k2), (a.k1_tilde, b.k1_tilde), (a.k2_tilde, b.k2_tilde)] {
            prop_assert!(close(y, c * x, 1e-14));
        }
        prop_assert!(a.k1 < a.k2 && a.k1_tilde < a.k2_tilde);
    }

    #[test]
    fn column_scaling_keeps_roots(m in 2u32..=20) {
        let p = LameParameters::reference();
        let b = bracket_bi(m, 1, &p).unwrap();
        let w = find_eigenvalue(&b, m, &p).unwrap();
        let det_scaled = |omega: f64| {
            let mut a = boundary_matrix(m, omega, &p).unwrap();
            let col = a.column(0) * Complex64::new(2.0, 0.0);
            a.set_column(0, &col);
            let d = a.determinant();
            if d.re.abs() >= d.im.abs() { d.re } else { d.im }
        };
        prop_assert!(det_scaled(w - 1e-6) * det_scaled(w + 1e-6) < 0.0);
        let d = boundary_matrix(m, w, &p).unwrap().determinant();
        let mut a = boundary_matrix(m, w, &p).unwrap();
        let col = a.column(0) * Complex64::new(2.0, 0.0);
        a.set_column(0, &col);
        prop_assert!((a.determinant() - 2.0 * d).norm() <= 1e-10 * d.norm().max(1e-300) + 1e-300);
    }

    #[test]
    fn densities_scale_eigenvalues(m in 3u32..=16, c in 0.25f64..4.0) {
        let p = LameParameters::reference();
        let q = LameParameters { rho: c * p.rho, rho_tilde: c * p.rho_tilde, ..p };
        let w = find_eigenvalue(&bracket_bi(m, 1, &p).unwrap(), m, &p).unwrap();
        let wq = find_eigenvalue(&bracket_bi(m, 1, &q).unwrap(), m, &q).unwrap();
        prop_assert!((wq - w / c.sqrt()).abs() < 1e-8 * w);
    }

    #[test]
    fn bi_eigenvalues_are_contained_and_certified(m in 2u32..=30, mu in 0.5f64..6.0, rt in 5.0f64..40.0) {
        let p = LameParameters::new(1.0, mu, 1.0, rt, 2).unwrap();
        let b = bracket_bi(m, 1, &p).unwrap();
        let w = find_eigenvalue(&b, m, &p).unwrap();
        prop_assert!(b.contains(w));
        let mode = solve_coefficients(m, w, &p).unwrap();
        prop_assert!(mode.sv_ratio < 1e-6);
        prop_assert!(mode.boundary_residual().unwrap() <= 1e-6);
    }

    #[test]
    fn bi_eigenvalues_approach_the_leading_term(m in 20u32..=60) {
        let p = LameParameters::reference();
        let w = find_eigenvalue(&bracket_bi(m, 1, &p).unwrap(), m, &p).unwrap();
        let w2 = find_eigenvalue(&bracket_bi(2 * m, 1, &p).unwrap(), 2 * m, &p).unwrap();
        let scale = p.contrast() * (p.rho / p.mu).sqrt();
        prop_assert!(w2 * scale / (2 * m) as f64 - 1.0 < w * scale / m as f64 - 1.0);
    }

    #[test]
    fn parts_add_up(m in prop::sample::select(vec![4u32, 13, 22]), r in 0.0f64..=1.0, t in 0.0f64..6.3) {
        let mode = reference_mode(m);
        for side in [Side::U, Side::V] {
            let u = mode.eval(side, r, t).unwrap();
            let p = mode.eval_part(side, Part::P, r, t).unwrap();
            let s = mode.eval_part(side, Part::S, r, t).unwrap();
            let (op_p, op_s) = mode.decompose_by_operators(side, r.max(1e-3), t).unwrap();
            let pr = mode.eval_part(side, Part::P, r.max(1e-3), t).unwrap();
            let sr = mode.eval_part(side, Part::S, r.max(1e-3), t).unwrap();
            let scale = u[0].norm() + u[1].norm() + p[0].norm() + p[1].norm() + 1e-300;
            let scale_r = pr[0].norm() + pr[1].norm() + sr[0].norm() + sr[1].norm() + 1e-300;
            for i in 0..2 {
                prop_assert!((u[i] - p[i] - s[i]).norm() <= 1e-12 * scale);
                prop_assert!((op_p[i] - pr[i]).norm() <= 1e-8 * scale_r);
                prop_assert!((op_s[i] - sr[i]).norm() <= 1e-8 * scale_r);
            }
        }
    }
}
