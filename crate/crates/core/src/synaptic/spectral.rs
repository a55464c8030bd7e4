use alloc::vec::Vec;

use super::{carrier, positive_part, SynapticElement};
use crate::error::{Error, Result};

/// Eigenvalues `λ₁ < … < λ_k` with eigenprojections, and the step family
/// `p_{a,λ} = Σ_{λᵢ ≤ λ} pᵢ`.
#[derive(Clone, Debug)]
pub struct SpectralResolution<T> {
    eigenvalues: Vec<f64>,
    projections: Vec<T>,
    zero: T,
    slack: f64,
}

impl<T: SynapticElement> SpectralResolution<T> {
    pub fn new(a: &T) -> Self {
        let (eigenvalues, projections) = a.spectral_clusters().into_iter().unzip();
        SpectralResolution {
            eigenvalues,
            projections,
            zero: a.zero(),
            slack: a.rank_tolerance(),
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn projections(&self) -> &[T] {
        &self.projections
    }

    /// `L_a = min spec(a)`
    pub fn lower(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// `U_a = max spec(a)`
    pub fn upper(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// `p_{a,λ}`. Eigenvalues within the rank tolerance above `λ` count as
    /// `λ`, as in [`formula_step`].
    pub fn step(&self, lambda: f64) -> T {
        self.eigenvalues
            .iter()
            .zip(&self.projections)
            .take_while(|(&l, _)| l <= lambda + self.slack)
            .fold(self.zero.clone(), |acc, (_, p)| acc.add(p))
    }

    /// `Σ λᵢ pᵢ`
    pub fn reconstruct(&self) -> T {
        self.eigenvalues
            .iter()
            .zip(&self.projections)
            .fold(self.zero.clone(), |acc, (&l, p)| acc.add(&p.scale(l)))
    }

    /// Midpoints between consecutive eigenvalues.
    pub fn midpoints(&self) -> Vec<f64> {
        self.eigenvalues
            .windows(2)
            .map(|w| 0.5 * (w[0] + w[1]))
            .collect()
    }

    /// Largest of `‖Σpᵢ − 1‖` and `‖pᵢpⱼ‖` for `i ≠ j`.
    pub fn resolution_residual(&self) -> f64 {
        let Some(first) = self.projections.first() else {
            return 0.0;
        };
        let sum = self
            .projections
            .iter()
            .fold(self.zero.clone(), |acc, p| acc.add(p));
        let mut worst = sum.dist(&first.unit());
        for (i, p) in self.projections.iter().enumerate() {
            for q in &self.projections[i + 1..] {
                worst = worst.max(p.product_size(q));
            }
        }
        worst
    }
}

/// `p_{a,λ} = 1 − ((a − λ)⁺)†`, evaluated from the definition.
pub fn formula_step<T: SynapticElement>(a: &T, lambda: f64) -> T {
    a.unit()
        .sub(&carrier(&positive_part(&a.add_scalar(-lambda))))
}

/// The Riemann–Stieltjes sum `Σ tⱼ (p_{a,tⱼ} − p_{a,tⱼ₋₁})` over an explicit
/// partition `t₀ < t₁ < … < t_N` with `t₀ < L_a ≤ U_a ≤ t_N`.
pub fn stieltjes_sum<T: SynapticElement>(a: &T, partition: &[f64]) -> Result<T> {
    let res = SpectralResolution::new(a);
    if partition.len() < 2 || partition.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Invalid(
            "partition must be strictly increasing".into(),
        ));
    }
    if !(partition[0] < res.lower()) || partition[partition.len() - 1] < res.upper() {
        return Err(Error::Invalid("partition must cover (L_a, U_a]".into()));
    }
    let mut sum = a.zero();
    let mut next = 0;
    for &t in &partition[1..] {
        // p_{a,t} − p_{a,t_prev} is the sum of eigenprojections with λ in (t_prev, t]
        while next < res.eigenvalues.len() && res.eigenvalues[next] <= t {
            sum = sum.add(&res.projections[next].scale(t));
            next += 1;
        }
    }
    Ok(sum)
}

/// [`stieltjes_sum`] over the uniform partition of `[L_a − mesh, U_a]` with
/// steps at most `mesh`. The result is within `mesh` of `a` in norm.
pub fn stieltjes_reconstruct<T: SynapticElement>(a: &T, mesh: f64) -> Result<T> {
    if !(mesh > 0.0) || !mesh.is_finite() {
        return Err(Error::NonPositiveMesh(mesh));
    }
    let res = SpectralResolution::new(a);
    let start = res.lower() - mesh;
    let width = res.upper() - start;
    let steps = libm::ceil(width / mesh).max(1.0) as usize;
    let mut partition: Vec<f64> = (0..=steps)
        .map(|j| start + width * (j as f64) / (steps as f64))
        .collect();
    partition[steps] = res.upper();
    partition.dedup();
    stieltjes_sum(a, &partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synaptic::{FnElement, SymMatrix};
    use alloc::vec;

    #[test]
    fn diagonal_step_family() {
        let a = SymMatrix::from_diagonal(&[1., 2.]);
        let r = SpectralResolution::new(&a);
        assert_eq!(r.step(0.5), SymMatrix::zeros(2));
        assert_eq!(r.step(1.0), SymMatrix::from_diagonal(&[1., 0.]));
        assert_eq!(r.step(1.5), SymMatrix::from_diagonal(&[1., 0.]));
        assert_eq!(r.step(2.0), SymMatrix::identity(2));
        assert!(formula_step(&a, 1.0).dist(&SymMatrix::from_diagonal(&[1., 0.])) < 1e-15);
        assert_eq!((r.lower(), r.upper()), (1.0, 2.0));
    }

    #[test]
    fn scalar_element() {
        let a = SymMatrix::identity(3).scale(2.5);
        let r = SpectralResolution::new(&a);
        assert_eq!(r.eigenvalues(), &[2.5]);
        assert!(r.projections()[0].dist(&SymMatrix::identity(3)) < 1e-15);
    }

    #[test]
    fn stieltjes_sums() {
        let a = SymMatrix::from_diagonal(&[1., 2., 3.]);
        let s = stieltjes_reconstruct(&a, 1e-3).unwrap();
        assert!(s.dist(&a) <= 1e-3);
        let exact = stieltjes_sum(&a, &[0.0, 1.0, 2.0, 3.0]).unwrap();
        assert!(exact.dist(&a) <= 1e-15);
        let z = SymMatrix::zeros(2);
        assert_eq!(stieltjes_reconstruct(&z, 0.1).unwrap().norm(), 0.0);
        assert_eq!(
            stieltjes_reconstruct(&a, 0.0).unwrap_err(),
            Error::NonPositiveMesh(0.0)
        );
        let f = FnElement::new(vec![0.25, -1.0]);
        assert!(stieltjes_reconstruct(&f, 0.01).unwrap().dist(&f) <= 0.01);
    }
}
