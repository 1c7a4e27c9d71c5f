use std::f64::consts::PI;

use super::bessel::pair;
use crate::{Error, Result};

/// Bracket for the s-th negative Airy zero: (most negative, least negative).
pub fn airy_zero_bracket(s: u32) -> (f64, f64) {
    let s = s as f64;
    let t = (3.0 * PI / 8.0 * (4.0 * s - 1.0)).powf(2.0 / 3.0);
    let sigma_max = 0.130 * (3.0 * PI / 8.0 * (4.0 * s - 1.051)).powi(-2);
    (-t * (1.0 + sigma_max), -t)
}

/// Leading-term value of a_s (sigma_s = 0).
pub fn airy_zero_leading(s: u32) -> f64 {
    airy_zero_bracket(s).1
}

/// Certified window (lo, hi) containing j_{m,s}, valid for m > 0.
pub fn zero_window(m: f64, s: u32) -> Option<(f64, f64)> {
    if m <= 0.0 || s == 0 {
        return None;
    }
    let (a_far, a_near) = airy_zero_bracket(s);
    let c = 2f64.cbrt();
    let m3 = m.cbrt();
    let lo = m - a_near / c * m3;
    let hi = m - a_far / c * m3 + 0.15 * a_far * a_far * c / m3;
    Some((lo, hi))
}

#[derive(Clone, Copy)]
enum Target {
    Value,
    Derivative,
}

/// (f, f') for the chosen target at x > 0.
fn eval(nu: f64, x: f64, target: Target) -> Result<(f64, f64)> {
    let (j, jm1) = pair(nu, x)?;
    let jp = jm1 - nu / x * j;
    Ok(match target {
        Target::Value => (j, jp),
        Target::Derivative => (jp, -jp / x + (nu * nu / (x * x) - 1.0) * j),
    })
}

/// Safeguarded Newton inside a sign-change bracket.
fn refine(nu: f64, mut lo: f64, mut hi: f64, target: Target) -> Result<f64> {
    let (flo, _) = eval(nu, lo, target)?;
    let mut slo = flo.signum();
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (f, df) = eval(nu, x, target)?;
        if f == 0.0 {
            return Ok(x);
        }
        if f.signum() == slo {
            lo = x;
            slo = f.signum();
        } else {
            hi = x;
        }
        let newton = x - f / df;
        let next = if df != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - x).abs();
        x = next;
        if step <= 4.0 * f64::EPSILON * x || hi - lo <= 4.0 * f64::EPSILON * x {
            return Ok(x);
        }
    }
    Err(Error::ZeroNotConverged { lo, hi })
}

/// Locates the s-th sign change of the target by a forward scan with step pi/2.
fn scan(nu: f64, s: u32, target: Target) -> Result<f64> {
    let start = if nu > 0.0 { nu } else { 1e-3 };
    let step = PI / 2.0;
    let mut a = start;
    let (mut fa, _) = eval(nu, a, target)?;
    let mut count = 0;
    for _ in 0..100_000 {
        let b = a + step;
        let (fb, _) = eval(nu, b, target)?;
        if fa == 0.0 || fa.signum() != fb.signum() {
            count += 1;
            if count == s {
                if fa == 0.0 {
                    return Ok(a);
                }
                return refine(nu, a, b, target);
            }
        }
        a = b;
        fa = fb;
    }
    Err(Error::ZeroNotConverged { lo: start, hi: a })
}

fn sign_change(nu: f64, lo: f64, hi: f64) -> Result<bool> {
    let (a, _) = eval(nu, lo, Target::Value)?;
    let (b, _) = eval(nu, hi, Target::Value)?;
    Ok(a.signum() != b.signum())
}

/// s-th positive zero of J_nu for integer or half-integer nu.
pub fn bessel_zero_nu(nu: f64, s: u32) -> Result<f64> {
    if s == 0 {
        return Err(Error::Domain("zero index must be >= 1".into()));
    }
    // consecutive zeros are more than pi apart for nu >= 1/2, so a narrower
    // certified window holds exactly one
    if let Some((lo, hi)) = zero_window(nu, s) {
        if hi - lo < 3.0 && nu >= 0.5 && sign_change(nu, lo, hi)? {
            return refine(nu, lo, hi, Target::Value);
        }
    }
    scan(nu, s, Target::Value)
}

/// j_{m,s}, checked against the two-sided window.
pub fn bessel_zero(m: u32, s: u32) -> Result<f64> {
    let nu = m as f64;
    let z = bessel_zero_nu(nu, s)?;
    if let Some((lo, hi)) = zero_window(nu, s) {
        if !(z > lo && z < hi) {
            return Err(Error::ZeroOutsideWindow {
                order: nu,
                s,
                value: z,
                lo,
                hi,
            });
        }
    }
    Ok(z)
}

/// s-th positive zero of J'_nu (the trivial zero at the origin is skipped).
pub fn bessel_prime_zero_nu(nu: f64, s: u32) -> Result<f64> {
    if s == 0 {
        return Err(Error::Domain("zero index must be >= 1".into()));
    }
    scan(nu, s, Target::Derivative)
}

/// j'_{m,s}.
pub fn bessel_prime_zero(m: u32, s: u32) -> Result<f64> {
    bessel_prime_zero_nu(m as f64, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros() {
        assert!((bessel_zero(0, 1).unwrap() - 2.404_825_557_695_773).abs() < 1e-10);
        assert!((bessel_zero(4, 1).unwrap() - 7.588_342_434_503_804).abs() < 1e-10);
        assert!((bessel_prime_zero(1, 1).unwrap() - 1.841_183_781_340_659_3).abs() < 1e-10);
        assert!((bessel_prime_zero(0, 1).unwrap() - 3.831_705_970_207_512).abs() < 1e-10);
    }

    #[test]
    fn airy_bracket_contains_known_zeros() {
        let known = [-2.338_107_410_459_767, -4.087_949_444_130_97, -5.520_559_828_095_551];
        for (i, a) in known.iter().enumerate() {
            let (far, near) = airy_zero_bracket(i as u32 + 1);
            assert!(*a >= far && *a <= near);
        }
    }
}
