use std::f64::consts::PI;
use std::sync::OnceLock;

pub const NODES_PER_PANEL: usize = 16;

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

fn rule16() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(NODES_PER_PANEL))
}

/// Composite 16-point nodes and weights on [a, b] with `panels` equal panels.
pub fn composite_nodes(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    let (x, w) = rule16();
    let h = (b - a) / panels as f64;
    let mut out = Vec::with_capacity(panels * NODES_PER_PANEL);
    for p in 0..panels {
        let mid = a + h * (p as f64 + 0.5);
        for (xi, wi) in x.iter().zip(w) {
            out.push((mid + 0.5 * h * xi, 0.5 * h * wi));
        }
    }
    out
}

/// Result of a composite rule with its panel-doubling check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub panels: usize,
    /// |I(2P) - I(P)|
    pub doubling_diff: f64,
    /// Set when the doubling disagreement exceeds 1e-8 relative.
    pub warning: bool,
}

pub fn panel_count(waves: f64) -> usize {
    let w = if waves.is_finite() { waves.max(0.0) } else { 0.0 };
    (4.0 * w).ceil().max(8.0) as usize
}

fn composite<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64, panels: usize) -> f64 {
    composite_nodes(a, b, panels)
        .into_iter()
        .map(|(x, w)| w * f(x))
        .sum()
}

/// Composite Gauss-Legendre integral of `f` over [a, b].
///
/// `waves` is the expected number of oscillations, k (b - a) / pi.
pub fn quadrature_1d<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, waves: f64) -> Quadrature {
    let panels = panel_count(waves);
    let coarse = composite(&mut f, a, b, panels);
    let fine = composite(&mut f, a, b, 2 * panels);
    let diff = (fine - coarse).abs();
    let scale = fine.abs().max(f64::MIN_POSITIVE);
    Quadrature {
        value: fine,
        panels: 2 * panels,
        doubling_diff: diff,
        warning: diff > 1e-8 * scale,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_integrate_polynomials() {
        let (x, w) = gauss_legendre(16);
        let s: f64 = w.iter().sum();
        assert!((s - 2.0).abs() < 1e-14);
        let m30: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(30)).sum();
        assert!((m30 - 2.0 / 31.0).abs() < 1e-14);
    }

    #[test]
    fn linear_and_oscillatory() {
        let q = quadrature_1d(|r| r, 0.0, 1.0, 0.0);
        assert!((q.value - 0.5).abs() < 1e-15 && !q.warning);
        let q = quadrature_1d(|t| (40.0 * t).cos().powi(2), 0.0, 2.0 * PI, 80.0);
        assert!((q.value - PI).abs() < 1e-12 && !q.warning);
    }

    #[test]
    fn under_resolved_integrand_warns() {
        let q = quadrature_1d(|t| (400.0 * t).cos().powi(2), 0.0, 2.0 * PI, 0.0);
        assert!(q.warning);
    }
}
