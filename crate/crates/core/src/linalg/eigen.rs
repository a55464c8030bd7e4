use alloc::vec::Vec;

use super::Matrix;

/// Eigenvalues in ascending order; eigenvector `k` is column `k` of `vectors`.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl SymmetricEigen {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        self.vectors.column(k)
    }
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Only the upper
/// triangle's mirror consistency is assumed; the input is not modified.
pub fn symmetric_eigen(a: &Matrix) -> SymmetricEigen {
    assert!(a.is_square(), "eigendecomposition needs a square matrix");
    let n = a.rows();
    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    let frob = m.frobenius();

    if frob > 0.0 {
        for _ in 0..MAX_SWEEPS {
            let mut off = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    off += m[(p, q)] * m[(p, q)];
                }
            }
            if libm::sqrt(off) <= 1e-17 * frob {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = m[(p, q)];
                    if apq == 0.0 {
                        continue;
                    }
                    let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                    let t = if theta >= 0.0 {
                        1.0 / (theta + libm::sqrt(theta * theta + 1.0))
                    } else {
                        -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
                    };
                    let c = 1.0 / libm::sqrt(t * t + 1.0);
                    let s = t * c;
                    for k in 0..n {
                        let mkp = m[(k, p)];
                        let mkq = m[(k, q)];
                        m[(k, p)] = c * mkp - s * mkq;
                        m[(k, q)] = s * mkp + c * mkq;
                    }
                    for k in 0..n {
                        let mpk = m[(p, k)];
                        let mqk = m[(q, k)];
                        m[(p, k)] = c * mpk - s * mqk;
                        m[(q, k)] = s * mpk + c * mqk;
                    }
                    m[(p, q)] = 0.0;
                    m[(q, p)] = 0.0;
                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = c * vkp - s * vkq;
                        v[(k, q)] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].total_cmp(&m[(j, j)]));
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, dst)] = v[(k, src)];
        }
    }
    SymmetricEigen { values, vectors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn swap_matrix_has_eigenvalues_plus_minus_one() {
        let a = Matrix::from_row_major(2, 2, vec![0., 1., 1., 0.]);
        let e = symmetric_eigen(&a);
        assert!((e.values[0] + 1.0).abs() < 1e-15);
        assert!((e.values[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn reconstructs_input() {
        let a = Matrix::from_row_major(3, 3, vec![2., -1., 0.5, -1., 3., 0.25, 0.5, 0.25, -4.]);
        let e = symmetric_eigen(&a);
        let d = Matrix::from_diagonal(&e.values);
        let back = e.vectors.mul(&d).mul(&e.vectors.transpose());
        assert!(back.sub(&a).max_abs() < 1e-13);
        let gram = e.vectors.transpose().mul(&e.vectors);
        assert!(gram.sub(&Matrix::identity(3)).max_abs() < 1e-14);
    }

    #[test]
    fn zero_and_empty() {
        let e = symmetric_eigen(&Matrix::zeros(3, 3));
        assert_eq!(e.values, vec![0.0; 3]);
        let e = symmetric_eigen(&Matrix::zeros(0, 0));
        assert!(e.values.is_empty());
    }
}
