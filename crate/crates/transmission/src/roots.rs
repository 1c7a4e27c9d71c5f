//! Sign-scan root location with bisection refinement.

use crate::{Error, Result};

const BASE_PANELS: usize = 400;
const MAX_PANELS: usize = 4000;

/// Smallest sign change of `f` on (lo, hi), refined by bisection.
///
/// The scan starts with 400 uniform panels and doubles up to 4000 before
/// giving up. Endpoints are excluded from the search.
pub fn smallest_root<F>(f: F, lo: f64, hi: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(lo < hi) {
        return Err(Error::Domain(format!("empty interval ({lo}, {hi})")));
    }
    let mut panels = BASE_PANELS;
    loop {
        if let Some((a, b)) = first_sign_change(&f, lo, hi, panels)? {
            return bisect(&f, a, b);
        }
        if panels == MAX_PANELS {
            return Err(Error::NoRootFound { lo, hi, panels });
        }
        panels = (panels * 2).min(MAX_PANELS);
    }
}

fn first_sign_change<F>(f: &F, lo: f64, hi: f64, panels: usize) -> Result<Option<(f64, f64)>>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = (hi - lo) / panels as f64;
    // keep the nodes strictly inside so that endpoint zeros of the bracket
    // construction are not reported
    let node = |i: usize| {
        let x = lo + h * i as f64;
        x.clamp(lo + 1e-12 * h, hi - 1e-12 * h)
    };
    let mut a = node(0);
    let mut fa = f(a)?;
    for i in 1..=panels {
        let b = node(i);
        let fb = f(b)?;
        if fa == 0.0 {
            return Ok(Some((a, a)));
        }
        if fa.signum() != fb.signum() {
            return Ok(Some((a, b)));
        }
        a = b;
        fa = fb;
    }
    Ok(None)
}

/// Bisection to machine resolution on a sign-change bracket.
pub fn bisect<F>(f: &F, mut a: f64, mut b: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if a == b {
        return Ok(a);
    }
    let mut fa = f(a)?;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
