use std::f64::consts::PI;

use crate::{Error, Result};

const RESCALE: f64 = 1e250;

/// Splits a non-negative order into its integer part and a fractional part in {0, 1/2}.
fn split_order(nu: f64) -> Result<(u32, bool)> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::Domain(format!("order {nu} must be finite and non-negative")));
    }
    let twice = 2.0 * nu;
    if twice.fract() != 0.0 {
        return Err(Error::Domain(format!("order {nu} is neither integer nor half-integer")));
    }
    let twice = twice as u64;
    Ok(((twice / 2) as u32, twice % 2 == 1))
}

fn check_arg(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument {x} is not finite")));
    }
    if x < 0.0 {
        return Err(Error::Domain(format!("argument {x} is negative")));
    }
    Ok(())
}

/// Ascending series for J_nu(x), nu >= 0.
fn series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let (n, frac) = (nu.floor() as u32, nu - nu.floor());
    let mut lead = if frac == 0.0 {
        1.0
    } else {
        half.powf(frac) / (0.5 * PI.sqrt())
    };
    for j in 1..=n {
        lead *= half / (frac + j as f64);
    }
    if lead == 0.0 {
        return 0.0;
    }
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..500 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn series_ok(nu: f64, x: f64) -> bool {
    x <= 1.0 || x * x <= 2.3 * nu.max(1.0)
}

/// Backward recurrence from far above max(nu, x); returns (J_nu, J_{nu-1}).
fn miller(n: u32, half: bool, x: f64) -> (f64, f64) {
    let frac = if half { 0.5 } else { 0.0 };
    let top = (n as f64).max(x);
    let mut k = top.ceil() as u32 + 20 + (8.0 * top.cbrt()).ceil() as u32;
    if k % 2 == 1 {
        k += 1;
    }
    let mut above = 0.0;
    let mut cur = 1e-200_f64;
    let mut at_n = 0.0;
    let mut at_nm1 = 0.0;
    let mut at_np1 = 0.0;
    let mut neumann = 0.0;
    // cur holds f_k, above holds f_{k+1}
    let mut idx = k;
    loop {
        if idx == n {
            at_n = cur;
        }
        if idx + 1 == n {
            at_nm1 = cur;
        }
        if idx == n + 1 {
            at_np1 = cur;
        }
        if !half && idx % 2 == 0 {
            neumann += if idx == 0 { cur } else { 2.0 * cur };
        }
        if idx == 0 {
            break;
        }
        let order = frac + idx as f64;
        let below = 2.0 * order / x * cur - above;
        above = cur;
        cur = below;
        idx -= 1;
        if cur.abs() > RESCALE {
            cur /= RESCALE;
            above /= RESCALE;
            at_n /= RESCALE;
            at_nm1 /= RESCALE;
            at_np1 /= RESCALE;
            neumann /= RESCALE;
        }
    }
    if half {
        // cur = f_{1/2}, above = f_{3/2}
        let f_half = cur;
        let f_mhalf = f_half / x - above;
        let target = 2.0 / (PI * x);
        let mut scale = target.sqrt() / f_half.hypot(f_mhalf);
        let (s, c) = x.sin_cos();
        let sign = if s.abs() >= c.abs() {
            s.signum() * f_half.signum()
        } else {
            c.signum() * f_mhalf.signum()
        };
        scale *= sign;
        let jm1 = if n == 0 { f_mhalf } else { at_nm1 };
        (at_n * scale, jm1 * scale)
    } else {
        let jm1 = if n == 0 { -at_np1 } else { at_nm1 };
        (at_n / neumann, jm1 / neumann)
    }
}

/// Upward recurrence from the closed forms of J_{1/2} and J_{-1/2}; stable for x >= nu.
fn upward_half(n: u32, x: f64) -> (f64, f64) {
    let amp = (2.0 / (PI * x)).sqrt();
    let (s, c) = x.sin_cos();
    let mut prev = amp * c;
    let mut cur = amp * s;
    for j in 0..n {
        let order = 0.5 + j as f64;
        let next = 2.0 * order / x * cur - prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// (J_nu(x), J_{nu-1}(x)) for x > 0.
pub(crate) fn pair(nu: f64, x: f64) -> Result<(f64, f64)> {
    let (n, half) = split_order(nu)?;
    check_arg(x)?;
    if x == 0.0 {
        return Err(Error::Domain("pair evaluation needs x > 0".into()));
    }
    if half && x >= nu {
        return Ok(upward_half(n, x));
    }
    if series_ok(nu, x) {
        let j = series(nu, x);
        let jm1 = if nu >= 1.0 {
            series(nu - 1.0, x)
        } else if half {
            (2.0 / (PI * x)).sqrt() * x.cos()
        } else {
            -series(1.0, x)
        };
        return Ok((j, jm1));
    }
    Ok(miller(n, half, x))
}

/// J_nu(x) for integer or half-integer nu >= 0.
pub fn bessel_jnu(nu: f64, x: f64) -> Result<f64> {
    split_order(nu)?;
    check_arg(x)?;
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(pair(nu, x)?.0)
}

/// J'_nu(x) via J'_nu = J_{nu-1} - (nu/x) J_nu.
pub fn bessel_jnu_prime(nu: f64, x: f64) -> Result<f64> {
    split_order(nu)?;
    check_arg(x)?;
    if x == 0.0 {
        return if nu == 1.0 {
            Ok(0.5)
        } else if nu == 0.5 {
            Err(Error::Domain("J'_{1/2} is unbounded at 0".into()))
        } else {
            Ok(0.0)
        };
    }
    let (j, jm1) = pair(nu, x)?;
    Ok(jm1 - nu / x * j)
}

/// Bessel function of the first kind J_m(x).
pub fn bessel_j(m: u32, x: f64) -> Result<f64> {
    bessel_jnu(m as f64, x)
}

/// Derivative J'_m(x).
pub fn bessel_j_prime(m: u32, x: f64) -> Result<f64> {
    bessel_jnu_prime(m as f64, x)
}

/// J_m, J'_m and J''_m at x > 0, the second derivative from Bessel's equation.
pub fn bessel_j_triple(m: u32, x: f64) -> Result<(f64, f64, f64)> {
    let nu = m as f64;
    if x == 0.0 {
        let j = bessel_j(m, 0.0)?;
        let jp = bessel_j_prime(m, 0.0)?;
        let jpp = match m {
            0 => -0.5,
            2 => 0.25,
            _ => 0.0,
        };
        return Ok((j, jp, jpp));
    }
    let (j, jm1) = pair(nu, x)?;
    let jp = jm1 - nu / x * j;
    let jpp = -jp / x + (nu * nu / (x * x) - 1.0) * j;
    Ok((j, jp, jpp))
}

/// Spherical Bessel function j_m(x) = sqrt(pi / 2x) J_{m+1/2}(x).
pub fn spherical_bessel_j(m: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    if x == 0.0 {
        return Ok(if m == 0 { 1.0 } else { 0.0 });
    }
    let nu = m as f64 + 0.5;
    Ok((PI / (2.0 * x)).sqrt() * pair(nu, x)?.0)
}

/// j_m, j'_m and j''_m at x > 0.
pub fn spherical_bessel_triple(m: u32, x: f64) -> Result<(f64, f64, f64)> {
    check_arg(x)?;
    let mf = m as f64;
    if x == 0.0 {
        return Ok(match m {
            0 => (1.0, 0.0, -1.0 / 3.0),
            1 => (0.0, 1.0 / 3.0, 0.0),
            2 => (0.0, 0.0, 2.0 / 15.0),
            _ => (0.0, 0.0, 0.0),
        });
    }
    let nu = mf + 0.5;
    let (big_j, big_jm1) = pair(nu, x)?;
    let amp = (PI / (2.0 * x)).sqrt();
    let j = amp * big_j;
    let jm1 = amp * big_jm1;
    // j'_m = j_{m-1} - (m+1)/x j_m, with j_{-1}(x) = cos(x)/x
    let jp = jm1 - (mf + 1.0) / x * j;
    let jpp = -2.0 / x * jp + (mf * (mf + 1.0) / (x * x) - 1.0) * j;
    Ok((j, jp, jpp))
}

/// Derivative j'_m(x).
pub fn spherical_bessel_j_prime(m: u32, x: f64) -> Result<f64> {
    Ok(spherical_bessel_triple(m, x)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(3, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j_prime(1, 0.0).unwrap(), 0.5);
        assert!(bessel_j(2, -1.0).is_err());
        assert!(bessel_jnu(0.25, 1.0).is_err());
    }

    #[test]
    fn regions_agree_at_the_seam() {
        for &nu in &[5.0, 20.0, 80.0] {
            let x = (2.3 * nu as f64).sqrt();
            let a = series(nu, x);
            let (b, _) = miller(nu as u32, false, x);
            assert!(((a - b) / a).abs() < 1e-13, "nu {nu}: {a} vs {b}");
        }
    }

    #[test]
    fn half_integer_paths_agree() {
        for &(n, x) in &[(3u32, 10.0), (10, 40.0), (40, 60.0)] {
            let (a, am1) = upward_half(n, x);
            let (b, bm1) = miller(n, true, x);
            let scale = a.abs().max(am1.abs());
            assert!((a - b).abs() < 1e-13 * scale, "({n}, {x}): {a} vs {b}");
            assert!((am1 - bm1).abs() < 1e-13 * scale, "({n}, {x}): {am1} vs {bm1}");
        }
    }

    #[test]
    fn spherical_closed_forms() {
        for &x in &[0.3f64, 1.0, 4.5, 17.0, 90.0] {
            let (s, c) = x.sin_cos();
            let j0 = s / x;
            let j1 = s / (x * x) - c / x;
            assert!((spherical_bessel_j(0, x).unwrap() - j0).abs() < 1e-14);
            assert!((spherical_bessel_j(1, x).unwrap() - j1).abs() < 1e-14);
            let j2 = 3.0 / x * j1 - j0;
            assert!((spherical_bessel_j(2, x).unwrap() - j2).abs() < 1e-13);
        }
    }
}
