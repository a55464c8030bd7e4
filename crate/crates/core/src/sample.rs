//! Random elements for property tests and verification suites.

use alloc::vec::Vec;

use rand::Rng;

use crate::linalg::Matrix;
use crate::synaptic::{FnElement, SymMatrix};

/// A standard normal variate (Box–Muller).
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    libm::sqrt(-2.0 * libm::log(u1)) * libm::cos(core::f64::consts::TAU * u2)
}

/// Symmetric matrix with independent Gaussian entries on and above the
/// diagonal, multiplied by `scale`.
pub fn random_symmetric<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> SymMatrix {
    let mut data = alloc::vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let x = scale * gaussian(rng);
            data[i * n + j] = x;
            data[j * n + i] = x;
        }
    }
    SymMatrix::new(n, data).expect("built symmetric")
}

/// An orthogonal matrix from Gram–Schmidt on Gaussian columns.
pub fn random_orthogonal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<f64> = (0..n).map(|_| gaussian(rng)).collect();
        for _ in 0..2 {
            for c in &cols {
                let d: f64 = c.iter().zip(&v).map(|(a, b)| a * b).sum();
                for (x, y) in v.iter_mut().zip(c) {
                    *x -= d * y;
                }
            }
        }
        let norm = libm::sqrt(v.iter().map(|x| x * x).sum());
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    let mut m = Matrix::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = c[i];
        }
    }
    m
}

/// `Q diag(values) Qᵀ` for a random orthogonal `Q`.
pub fn random_with_spectrum<R: Rng + ?Sized>(rng: &mut R, values: &[f64]) -> SymMatrix {
    let q = random_orthogonal(rng, values.len());
    SymMatrix::from_diagonal(values).conjugate(&q)
}

/// A random projection of the given rank.
pub fn random_projection<R: Rng + ?Sized>(rng: &mut R, n: usize, rank: usize) -> SymMatrix {
    let q = random_orthogonal(rng, n);
    let cols: Vec<Vec<f64>> = (0..rank.min(n)).map(|j| q.column(j)).collect();
    SymMatrix::from_orthonormal(n, &cols)
}

/// Uniform point of the probability simplex.
pub fn random_probability<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..n)
        .map(|_| -libm::log(1.0 - rng.random::<f64>()))
        .collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

/// A density matrix (positive, unit trace) with a random spectrum.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SymMatrix {
    let p = random_probability(rng, n);
    random_with_spectrum(rng, &p)
}

/// An effect `0 ≤ e ≤ 1` with a random spectrum in `[0, 1]`.
pub fn random_effect<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SymMatrix {
    let s: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    random_with_spectrum(rng, &s)
}

/// A function with independent Gaussian values times `scale`.
pub fn random_function<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> FnElement {
    FnElement::new((0..n).map(|_| scale * gaussian(rng)).collect())
}
