use alloc::vec::Vec;

use super::Matrix;

const MAX_SWEEPS: usize = 80;

/// One-sided (Hestenes) Jacobi: returns the column-orthogonalized matrix
/// `U Σ` and the accumulated rotation `V` with `M V = U Σ`.
fn hestenes(m: &Matrix) -> (Matrix, Matrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut u = m.clone();
    let mut v = Matrix::identity(cols);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..cols {
            for j in i + 1..cols {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for k in 0..rows {
                    let a = u[(k, i)];
                    let b = u[(k, j)];
                    alpha += a * a;
                    beta += b * b;
                    gamma += a * b;
                }
                if gamma == 0.0 || gamma.abs() <= 1e-15 * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + libm::sqrt(1.0 + zeta * zeta))
                } else {
                    -1.0 / (-zeta + libm::sqrt(1.0 + zeta * zeta))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                for k in 0..rows {
                    let a = u[(k, i)];
                    let b = u[(k, j)];
                    u[(k, i)] = c * a - s * b;
                    u[(k, j)] = s * a + c * b;
                }
                for k in 0..cols {
                    let a = v[(k, i)];
                    let b = v[(k, j)];
                    v[(k, i)] = c * a - s * b;
                    v[(k, j)] = s * a + c * b;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    (u, v)
}

fn column_norms(u: &Matrix) -> Vec<f64> {
    (0..u.cols())
        .map(|j| libm::sqrt((0..u.rows()).map(|k| u[(k, j)] * u[(k, j)]).sum()))
        .collect()
}

/// Singular values of `m`, one per column, in column order (unsorted).
pub fn singular_values(m: &Matrix) -> Vec<f64> {
    column_norms(&hestenes(m).0)
}

/// Orthonormal basis of `{x : m x = 0}`. A singular value counts as zero when
/// it is at most `rel_tol` times the largest one.
pub fn null_space(m: &Matrix, rel_tol: f64) -> Vec<Vec<f64>> {
    let (u, v) = hestenes(m);
    let sigma = column_norms(&u);
    let top = sigma.iter().fold(0.0_f64, |a, &b| a.max(b));
    select(&sigma, &v, rel_tol * top)
}

/// Orthonormal basis of the right singular vectors of `m` with singular
/// value at most `cut`.
pub fn null_space_below(m: &Matrix, cut: f64) -> Vec<Vec<f64>> {
    let (u, v) = hestenes(m);
    select(&column_norms(&u), &v, cut)
}

fn select(sigma: &[f64], v: &Matrix, cut: f64) -> Vec<Vec<f64>> {
    sigma
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s <= cut)
        .map(|(j, _)| v.column(j))
        .collect()
}
