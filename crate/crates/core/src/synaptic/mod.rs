//! Synaptic-algebra operations over two concrete instances: real symmetric
//! matrices ([`SymMatrix`]) and real functions on a finite set
//! ([`FnElement`]).
//!
//! The instances implement the small [`SynapticElement`] core (linear
//! structure, Jordan product, clustered spectral decomposition); everything
//! else (square roots, absolute values, carriers, spectral resolutions,
//! inverses) is functional calculus written once, generically.

mod commutant;
mod func;
mod morphism;
mod projection;
mod simple;
mod spectral;
mod sym;

use alloc::vec::Vec;
use core::fmt::Debug;

pub use commutant::{center, commutant, double_commutant, SubalgebraReport, Subspace};
pub use func::FnElement;
pub use morphism::{check_synaptic_morphism, MorphismCondition, SynapticMorphismReport};
pub use projection::{
    convex_split, effect_projection_meet, orthomodular_residual, proj_join, proj_leq, proj_meet,
    proj_perp,
};
pub use simple::{polynomial_direct, SimpleElement};
pub use spectral::{formula_step, stieltjes_reconstruct, stieltjes_sum, SpectralResolution};
pub use sym::SymMatrix;

use crate::error::{Error, Result};
use crate::tol;

/// An element of a concrete synaptic algebra.
pub trait SynapticElement: Clone + Debug + Sized {
    /// Same instance and same size.
    fn same_algebra(&self, other: &Self) -> bool;
    /// The unit `1` of this element's algebra.
    fn unit(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, t: f64) -> Self;
    /// `½(ab + ba)`, no compatibility check.
    fn jordan_unchecked(&self, other: &Self) -> Self;
    /// Size of `ab` computed in the enveloping algebra.
    fn product_size(&self, other: &Self) -> f64;
    /// Size of `ab − ba`.
    fn commutator_size(&self, other: &Self) -> f64;
    /// Distinct eigenvalues in ascending order with their eigenprojections.
    fn spectral_clusters(&self) -> Vec<(f64, Self)>;
    /// Order-unit norm.
    fn norm(&self) -> f64;
    /// Trace (or Euclidean) pairing used for subspace geometry.
    fn inner(&self, other: &Self) -> f64;
    /// Orthonormal basis of the whole algebra under [`inner`](Self::inner).
    fn basis(&self) -> Vec<Self>;
    /// A spectral value of at most this size counts as zero.
    fn rank_tolerance(&self) -> f64;
    /// Slack allowed below zero in positivity tests.
    fn cone_tolerance(&self) -> f64;
    /// Projection onto the intersection of the ranges of two projections.
    fn range_meet(&self, other: &Self) -> Self;
    /// Orthonormal basis of `{x : x b = b x for all b in set}`.
    fn commutant_basis(&self, set: &[Self]) -> Vec<Self>;

    fn zero(&self) -> Self {
        self.scale(0.0)
    }

    fn add_scalar(&self, t: f64) -> Self {
        self.add(&self.unit().scale(t))
    }

    fn dist(&self, other: &Self) -> f64 {
        self.sub(other).norm()
    }
}

fn ensure_same<T: SynapticElement>(a: &T, b: &T) -> Result<()> {
    if a.same_algebra(b) {
        Ok(())
    } else {
        Err(Error::InstanceMismatch)
    }
}

/// `a ⊙ b = ½(ab + ba)`
pub fn jordan<T: SynapticElement>(a: &T, b: &T) -> Result<T> {
    ensure_same(a, b)?;
    Ok(a.jordan_unchecked(b))
}

pub fn square<T: SynapticElement>(a: &T) -> T {
    a.jordan_unchecked(a)
}

/// `aⁿ` through `aⁿ = a ⊙ aⁿ⁻¹`; `a⁰ = 1`.
pub fn power<T: SynapticElement>(a: &T, k: u32) -> T {
    (0..k).fold(a.unit(), |acc, _| a.jordan_unchecked(&acc))
}

/// The quadratic map `b ↦ aba`, evaluated as `2a⊙(a⊙b) − a²⊙b`.
pub fn quadratic<T: SynapticElement>(a: &T, b: &T) -> Result<T> {
    ensure_same(a, b)?;
    let ab = a.jordan_unchecked(b);
    Ok(a.jordan_unchecked(&ab)
        .scale(2.0)
        .sub(&square(a).jordan_unchecked(b)))
}

/// `Σ f(λᵢ) pᵢ` over the clustered spectral decomposition of `a`.
pub fn functional_calculus<T: SynapticElement>(a: &T, f: impl Fn(f64) -> f64) -> T {
    a.spectral_clusters()
        .iter()
        .fold(a.zero(), |acc, (lambda, p)| acc.add(&p.scale(f(*lambda))))
}

pub fn spectrum<T: SynapticElement>(a: &T) -> Vec<f64> {
    a.spectral_clusters().into_iter().map(|(l, _)| l).collect()
}

pub fn is_positive<T: SynapticElement>(a: &T) -> bool {
    spectrum(a)
        .first()
        .map_or(true, |&l| l >= -a.cone_tolerance())
}

/// `a ≤ b`
pub fn leq<T: SynapticElement>(a: &T, b: &T) -> Result<bool> {
    ensure_same(a, b)?;
    Ok(is_positive(&b.sub(a)))
}

/// Positive square root: the unique positive `r` with `r² = a`.
pub fn sqrt<T: SynapticElement>(a: &T) -> Result<T> {
    if !is_positive(a) {
        return Err(Error::NotPositive);
    }
    Ok(functional_calculus(a, |l| libm::sqrt(l.max(0.0))))
}

/// `|a| = (a²)^{1/2}`, evaluated on the spectrum of `a` directly so that
/// small eigenvalues are not lost to squaring.
pub fn abs<T: SynapticElement>(a: &T) -> T {
    functional_calculus(a, f64::abs)
}

/// `|a|`, `a⁺ = ½(|a| + a)` and `a⁻ = ½(|a| − a)`.
#[derive(Clone, Debug)]
pub struct Decomposition<T> {
    pub abs: T,
    pub pos: T,
    pub neg: T,
}

pub fn decompose<T: SynapticElement>(a: &T) -> Decomposition<T> {
    let abs = abs(a);
    let pos = abs.add(a).scale(0.5);
    let neg = abs.sub(a).scale(0.5);
    Decomposition { abs, pos, neg }
}

pub fn positive_part<T: SynapticElement>(a: &T) -> T {
    decompose(a).pos
}

/// The carrier `a†`: the projection onto the closure of the range of `a`
/// (support indicator for functions).
pub fn carrier<T: SynapticElement>(a: &T) -> T {
    let tol = a.rank_tolerance();
    a.spectral_clusters()
        .iter()
        .filter(|(l, _)| l.abs() > tol)
        .fold(a.zero(), |acc, (_, p)| acc.add(p))
}

pub fn is_invertible<T: SynapticElement>(a: &T) -> bool {
    let tol = a.rank_tolerance();
    spectrum(a).iter().all(|l| l.abs() > tol)
}

pub fn inverse<T: SynapticElement>(a: &T) -> Result<T> {
    if !is_invertible(a) {
        return Err(Error::NotInvertible);
    }
    Ok(functional_calculus(a, |l| 1.0 / l))
}

/// `p² = p`
pub fn is_projection<T: SynapticElement>(p: &T) -> bool {
    square(p).dist(p) <= p.rank_tolerance()
}

/// `0 ≤ e ≤ 1`
pub fn is_effect<T: SynapticElement>(e: &T) -> bool {
    let s = spectrum(e);
    let tol = e.cone_tolerance();
    s.first().map_or(true, |&l| l >= -tol) && s.last().map_or(true, |&l| l <= 1.0 + tol)
}

/// Membership read off the spectrum: `A⁺ ⇔ spec ⊆ ℝ⁺`, `P ⇔ spec ⊆ {0,1}`,
/// `E ⇔ spec ⊆ [0,1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumClass {
    pub positive: bool,
    pub projection: bool,
    pub effect: bool,
}

pub fn classify_spectrum<T: SynapticElement>(a: &T) -> SpectrumClass {
    let s = spectrum(a);
    let tol = a.cone_tolerance().max(a.rank_tolerance());
    SpectrumClass {
        positive: s.iter().all(|&l| l >= -tol),
        projection: s.iter().all(|&l| l.abs() <= tol || (l - 1.0).abs() <= tol),
        effect: s.iter().all(|&l| l >= -tol && l <= 1.0 + tol),
    }
}

fn pair_tolerance<T: SynapticElement>(a: &T, b: &T) -> f64 {
    if a.rank_tolerance() == 0.0 {
        0.0
    } else {
        tol::RANK_REL * tol::scale(a.norm()) * tol::scale(b.norm())
    }
}

/// `ab = ba`
pub fn commutes<T: SynapticElement>(a: &T, b: &T) -> bool {
    a.commutator_size(b) <= pair_tolerance(a, b)
}

/// `ab = 0`
pub fn product_is_zero<T: SynapticElement>(a: &T, b: &T) -> bool {
    a.product_size(b) <= pair_tolerance(a, b)
}
