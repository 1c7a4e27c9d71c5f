use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Nullvector of a square matrix after scaling its columns to unit norm.
///
/// Returns the unit-norm vector in the original column scaling together with
/// the ratio of smallest to largest singular value of the equilibrated matrix.
pub fn equilibrated_nullvector(a: &DMatrix<Complex64>) -> (DVector<Complex64>, f64) {
    let n = a.ncols();
    let scales: Vec<f64> = (0..n)
        .map(|j| {
            let s = a.column(j).norm();
            if s > 0.0 {
                s
            } else {
                1.0
            }
        })
        .collect();
    let mut scaled = a.clone();
    for (j, s) in scales.iter().enumerate() {
        scaled.column_mut(j).unscale_mut(*s);
    }
    let svd = scaled.svd(false, true);
    let sv = &svd.singular_values;
    let (imin, smin) = sv
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, &s)| if s < acc.1 { (i, s) } else { acc });
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let mut x = DVector::from_iterator(n, (0..n).map(|j| v_t[(imin, j)].conj() / scales[j]));
    let norm = x.norm();
    x.unscale_mut(norm);
    (x, smin / smax)
}

/// ‖A x‖ / (‖A‖_F ‖x‖).
pub fn relative_residual(a: &DMatrix<Complex64>, x: &DVector<Complex64>) -> f64 {
    (a * x).norm() / (a.norm() * x.norm())
}

/// Product of the Euclidean row norms.
pub fn row_norm_product(a: &DMatrix<Complex64>) -> f64 {
    (0..a.nrows()).map(|i| a.row(i).norm()).product()
}

/// Multiplies by a unit phase so that component `k` becomes real and non-negative.
pub fn fix_phase(x: &mut DVector<Complex64>, k: usize) {
    let c = x[k];
    if c.norm() > 0.0 {
        let phase = c.conj() / c.norm();
        for v in x.iter_mut() {
            *v *= phase;
        }
    }
}
