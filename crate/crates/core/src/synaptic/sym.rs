use alloc::vec;
use alloc::vec::Vec;

use super::SynapticElement;
use crate::error::{Error, Result};
use crate::linalg::{null_space, null_space_below, symmetric_eigen, Matrix, SymmetricEigen};
use crate::tol;

/// A real symmetric `n × n` matrix, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Symmetrizes `(m + mᵀ)/2`, rejecting inputs whose correction exceeds
    /// [`tol::SYMMETRIZE_MAX`] relative to the largest entry.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                found: data.len(),
            });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::Invalid("matrix entries must be finite".into()));
        }
        let size = tol::scale(data.iter().fold(0.0_f64, |m, x| m.max(x.abs())));
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i + 1..n {
                worst = worst.max((data[i * n + j] - data[j * n + i]).abs() / 2.0);
            }
        }
        if worst > tol::SYMMETRIZE_MAX * size {
            return Err(Error::NotSymmetric(worst));
        }
        Ok(Self::symmetrized(n, data))
    }

    fn symmetrized(n: usize, mut data: Vec<f64>) -> Self {
        for i in 0..n {
            for j in i + 1..n {
                let m = 0.5 * (data[i * n + j] + data[j * n + i]);
                data[i * n + j] = m;
                data[j * n + i] = m;
            }
        }
        SymMatrix { n, data }
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Invalid("a symmetric matrix must be square".into()));
        }
        Self::new(m.rows(), m.as_slice().to_vec())
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(&vec![1.0; n])
    }

    pub fn from_diagonal(d: &[f64]) -> Self {
        let n = d.len();
        let mut s = Self::zeros(n);
        for (i, &x) in d.iter().enumerate() {
            s.data[i * n + i] = x;
        }
        s
    }

    /// `Σ vᵢ vᵢᵀ`, the projection onto the span of orthonormal vectors `vᵢ`.
    pub fn from_orthonormal(n: usize, vectors: &[Vec<f64>]) -> Self {
        let mut s = Self::zeros(n);
        for v in vectors {
            for i in 0..n {
                for j in 0..n {
                    s.data[i * n + j] += v[i] * v[j];
                }
            }
        }
        Self::symmetrized(n, s.data)
    }

    /// The rank-one projection onto the line through `v` (which need not be
    /// normalized).
    pub fn rank_one(v: &[f64]) -> Self {
        let norm2: f64 = v.iter().map(|x| x * x).sum();
        let u: Vec<f64> = v.iter().map(|x| x / libm::sqrt(norm2)).collect();
        Self::from_orthonormal(v.len(), &[u])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_row_major(self.n, self.n, self.data.clone())
    }

    pub fn eigen(&self) -> SymmetricEigen {
        symmetric_eigen(&self.to_matrix())
    }

    /// The (generally non-symmetric) product `ab`.
    pub fn product(&self, other: &Self) -> Matrix {
        self.to_matrix().mul(&other.to_matrix())
    }

    /// `u a uᵀ`
    pub fn conjugate(&self, u: &Matrix) -> Self {
        let m = u.mul(&self.to_matrix()).mul(&u.transpose());
        Self::symmetrized(self.n, m.into_vec())
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `vᵀ a v`
    pub fn quadratic_form(&self, v: &[f64]) -> f64 {
        let n = self.n;
        (0..n)
            .map(|i| v[i] * (0..n).map(|j| self.data[i * n + j] * v[j]).sum::<f64>())
            .sum()
    }

    fn elementwise(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.n, other.n, "symmetric matrices of different sizes");
        SymMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn antisymmetric_size(m: &Matrix) -> f64 {
        let n = m.rows();
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                let d = m[(i, j)] - m[(j, i)];
                s += 2.0 * d * d;
            }
        }
        libm::sqrt(s)
    }

    /// Orthonormal basis element `k` under the trace pairing: `E_ii` first,
    /// then `(E_ij + E_ji)/√2` for `i < j`.
    fn basis_element(n: usize, k: usize) -> Self {
        let mut s = Self::zeros(n);
        if k < n {
            s.data[k * n + k] = 1.0;
            return s;
        }
        let mut k = k - n;
        for i in 0..n {
            let row = n - i - 1;
            if k < row {
                let j = i + 1 + k;
                let w = core::f64::consts::FRAC_1_SQRT_2;
                s.data[i * n + j] = w;
                s.data[j * n + i] = w;
                return s;
            }
            k -= row;
        }
        unreachable!("basis index out of range")
    }

    fn dimension(&self) -> usize {
        self.n * (self.n + 1) / 2
    }
}

impl SynapticElement for SymMatrix {
    fn same_algebra(&self, other: &Self) -> bool {
        self.n == other.n
    }

    fn unit(&self) -> Self {
        Self::identity(self.n)
    }

    fn add(&self, other: &Self) -> Self {
        self.elementwise(other, |a, b| a + b)
    }

    fn sub(&self, other: &Self) -> Self {
        self.elementwise(other, |a, b| a - b)
    }

    fn scale(&self, t: f64) -> Self {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * t).collect(),
        }
    }

    fn jordan_unchecked(&self, other: &Self) -> Self {
        // (ab)ᵀ = ba, so ½(ab + ba) is the symmetric part of ab
        Self::symmetrized(self.n, self.product(other).into_vec())
    }

    fn product_size(&self, other: &Self) -> f64 {
        self.product(other).frobenius()
    }

    fn commutator_size(&self, other: &Self) -> f64 {
        Self::antisymmetric_size(&self.product(other))
    }

    fn spectral_clusters(&self) -> Vec<(f64, Self)> {
        let n = self.n;
        if n == 0 {
            return Vec::new();
        }
        let eig = self.eigen();
        let norm = eig.values[0].abs().max(eig.values[n - 1].abs());
        let gap = tol::CLUSTER_REL * tol::scale(norm);
        let mut out = Vec::new();
        let mut start = 0;
        for k in 1..=n {
            if k == n || eig.values[k] - eig.values[k - 1] > gap {
                let members = &eig.values[start..k];
                let mean = members.iter().sum::<f64>() / members.len() as f64;
                let vectors: Vec<Vec<f64>> = (start..k).map(|c| eig.vector(c)).collect();
                out.push((mean, Self::from_orthonormal(n, &vectors)));
                start = k;
            }
        }
        out
    }

    fn norm(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        let v = self.eigen().values;
        v[0].abs().max(v[self.n - 1].abs())
    }

    fn inner(&self, other: &Self) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    fn basis(&self) -> Vec<Self> {
        (0..self.dimension())
            .map(|k| Self::basis_element(self.n, k))
            .collect()
    }

    fn rank_tolerance(&self) -> f64 {
        tol::RANK_REL * tol::scale(self.norm())
    }

    fn cone_tolerance(&self) -> f64 {
        tol::PSD_REL * tol::scale(self.norm())
    }

    fn range_meet(&self, other: &Self) -> Self {
        // x ∈ range(p) ∩ range(q) iff x is annihilated by both 1 − p and 1 − q
        let n = self.n;
        let mut stacked = Matrix::zeros(2 * n, n);
        for i in 0..n {
            for j in 0..n {
                let delta = if i == j { 1.0 } else { 0.0 };
                stacked[(i, j)] = delta - self.get(i, j);
                stacked[(n + i, j)] = delta - other.get(i, j);
            }
        }
        let vectors = null_space_below(&stacked, tol::RANK_REL);
        Self::from_orthonormal(n, &vectors)
    }

    fn commutant_basis(&self, set: &[Self]) -> Vec<Self> {
        let n = self.n;
        let basis = self.basis();
        let d = basis.len();
        let per = n * n.saturating_sub(1) / 2;
        if set.is_empty() || per == 0 {
            return basis;
        }
        // column k holds the strict upper triangle of [S_k, b] for each b
        let mut m = Matrix::zeros(set.len() * per, d);
        for (k, s) in basis.iter().enumerate() {
            for (bi, b) in set.iter().enumerate() {
                let p = s.product(b);
                let mut row = bi * per;
                for i in 0..n {
                    for j in i + 1..n {
                        m[(row, k)] = p[(i, j)] - p[(j, i)];
                        row += 1;
                    }
                }
            }
        }
        null_space(&m, tol::RANK_REL)
            .into_iter()
            .map(|c| {
                c.iter()
                    .zip(&basis)
                    .fold(Self::zeros(n), |acc, (&ck, s)| acc.add(&s.scale(ck)))
            })
            .collect()
    }
}
