use alloc::vec::Vec;

use super::{commutes, is_projection, product_is_zero, SynapticElement};
use crate::error::{Error, Result};

/// A simple element in spectral form `Σ λᵢ pᵢ`, `λ₁ < … < λ_k`, with the
/// `pᵢ` nonzero, pairwise commuting, and summing to `1`.
#[derive(Clone, Debug)]
pub struct SimpleElement<T> {
    values: Vec<f64>,
    projections: Vec<T>,
}

impl<T: SynapticElement> SimpleElement<T> {
    pub fn new(values: Vec<f64>, projections: Vec<T>) -> Result<Self> {
        if values.is_empty() || values.len() != projections.len() {
            return Err(Error::NotResolution(
                "one coefficient per projection is required",
            ));
        }
        if values.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::NotResolution(
                "coefficients must be strictly increasing",
            ));
        }
        let first = &projections[0];
        if projections.iter().any(|p| !p.same_algebra(first)) {
            return Err(Error::InstanceMismatch);
        }
        if !projections.iter().all(is_projection) {
            return Err(Error::NotProjection);
        }
        if projections.iter().any(|p| p.norm() < 0.5) {
            return Err(Error::NotResolution("projections must be nonzero"));
        }
        for (i, p) in projections.iter().enumerate() {
            for q in &projections[i + 1..] {
                if !commutes(p, q) {
                    return Err(Error::NotResolution("projections must commute"));
                }
                if !product_is_zero(p, q) {
                    return Err(Error::NotResolution("projections must be orthogonal"));
                }
            }
        }
        let sum = projections.iter().fold(first.zero(), |acc, p| acc.add(p));
        if sum.dist(&first.unit()) > first.rank_tolerance() {
            return Err(Error::NotResolution("projections must sum to 1"));
        }
        Ok(SimpleElement {
            values,
            projections,
        })
    }

    /// The spectral form of an element (every element of a finite-dimensional
    /// instance is simple).
    pub fn from_element(a: &T) -> Self {
        let (values, projections) = a.spectral_clusters().into_iter().unzip();
        SimpleElement {
            values,
            projections,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn projections(&self) -> &[T] {
        &self.projections
    }

    pub fn element(&self) -> T {
        self.apply(|t| t)
    }

    /// `f(a) = Σ f(λᵢ) pᵢ`
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> T {
        self.values
            .iter()
            .zip(&self.projections)
            .fold(self.projections[0].zero(), |acc, (&l, p)| {
                acc.add(&p.scale(f(l)))
            })
    }

    /// `f(a)` for `f(t) = Σ coeffs[k] tᵏ`.
    pub fn apply_polynomial(&self, coeffs: &[f64]) -> T {
        self.apply(|t| coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c))
    }
}

/// `Σ coeffs[k] aᵏ` by Horner's rule in the algebra itself.
pub fn polynomial_direct<T: SynapticElement>(a: &T, coeffs: &[f64]) -> T {
    let one = a.unit();
    coeffs.iter().rev().fold(a.zero(), |acc, &c| {
        acc.jordan_unchecked(a).add(&one.scale(c))
    })
}
