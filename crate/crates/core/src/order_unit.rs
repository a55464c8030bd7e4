//! Finite-dimensional order-unit normed spaces `(V, v)`, the unit interval
//! `E(V, v) = {a : 0 ≤ a ≤ v}`, and the extension of effect-algebra
//! morphisms `E(V, v) → E(W, w)` to positive linear maps `V → W`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt::Debug;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::sample::gaussian;
use crate::synaptic::{self, FnElement, SymMatrix, SynapticElement};
use crate::tol;

/// A finite-dimensional Archimedean order-unit space with a fixed linear
/// coordinate system.
pub trait OrderUnitSpace {
    type Vector: Clone + Debug;

    fn dimension(&self) -> usize;
    fn order_unit(&self) -> Self::Vector;
    fn coords(&self, a: &Self::Vector) -> Vec<f64>;
    fn from_coords(&self, c: &[f64]) -> Self::Vector;
    /// Membership in the positive cone, with the space's tolerance.
    fn in_cone(&self, a: &Self::Vector) -> bool;
    /// `inf{λ > 0 : −λv ≤ a ≤ λv}`
    fn norm(&self, a: &Self::Vector) -> f64;

    fn zero(&self) -> Self::Vector {
        self.from_coords(&alloc::vec![0.0; self.dimension()])
    }

    fn combine(&self, s: f64, a: &Self::Vector, t: f64, b: &Self::Vector) -> Self::Vector {
        let ca = self.coords(a);
        let cb = self.coords(b);
        let c: Vec<f64> = ca.iter().zip(&cb).map(|(x, y)| s * x + t * y).collect();
        self.from_coords(&c)
    }

    fn add(&self, a: &Self::Vector, b: &Self::Vector) -> Self::Vector {
        self.combine(1.0, a, 1.0, b)
    }

    fn sub(&self, a: &Self::Vector, b: &Self::Vector) -> Self::Vector {
        self.combine(1.0, a, -1.0, b)
    }

    fn scale(&self, a: &Self::Vector, t: f64) -> Self::Vector {
        self.combine(t, a, 0.0, a)
    }

    /// `a ≤ b`
    fn leq(&self, a: &Self::Vector, b: &Self::Vector) -> bool {
        self.in_cone(&self.sub(b, a))
    }

    fn distance(&self, a: &Self::Vector, b: &Self::Vector) -> f64 {
        self.norm(&self.sub(a, b))
    }
}

/// Real symmetric `n × n` matrices, positive semidefinite cone, `v = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymSpace {
    pub n: usize,
}

/// `ℝ^X` for `|X| = points`, pointwise cone, `v` the constant one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctionSpace {
    pub points: usize,
}

/// `ℝ` with its usual order and unit `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RealLine;

impl OrderUnitSpace for SymSpace {
    type Vector = SymMatrix;

    fn dimension(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    fn order_unit(&self) -> SymMatrix {
        SymMatrix::identity(self.n)
    }

    fn coords(&self, a: &SymMatrix) -> Vec<f64> {
        a.basis().iter().map(|b| b.inner(a)).collect()
    }

    fn from_coords(&self, c: &[f64]) -> SymMatrix {
        SymMatrix::zeros(self.n)
            .basis()
            .iter()
            .zip(c)
            .fold(SymMatrix::zeros(self.n), |acc, (b, &x)| {
                acc.add(&b.scale(x))
            })
    }

    fn in_cone(&self, a: &SymMatrix) -> bool {
        synaptic::is_positive(a)
    }

    fn norm(&self, a: &SymMatrix) -> f64 {
        a.norm()
    }

    fn add(&self, a: &SymMatrix, b: &SymMatrix) -> SymMatrix {
        SynapticElement::add(a, b)
    }

    fn sub(&self, a: &SymMatrix, b: &SymMatrix) -> SymMatrix {
        SynapticElement::sub(a, b)
    }

    fn scale(&self, a: &SymMatrix, t: f64) -> SymMatrix {
        SynapticElement::scale(a, t)
    }
}

impl OrderUnitSpace for FunctionSpace {
    type Vector = FnElement;

    fn dimension(&self) -> usize {
        self.points
    }

    fn order_unit(&self) -> FnElement {
        FnElement::constant(self.points, 1.0)
    }

    fn coords(&self, a: &FnElement) -> Vec<f64> {
        a.values().to_vec()
    }

    fn from_coords(&self, c: &[f64]) -> FnElement {
        FnElement::new(c.to_vec())
    }

    fn in_cone(&self, a: &FnElement) -> bool {
        a.values().iter().all(|&x| x >= -tol::FUNCTION_CONE)
    }

    fn norm(&self, a: &FnElement) -> f64 {
        a.norm()
    }
}

impl OrderUnitSpace for RealLine {
    type Vector = f64;

    fn dimension(&self) -> usize {
        1
    }

    fn order_unit(&self) -> f64 {
        1.0
    }

    fn coords(&self, a: &f64) -> Vec<f64> {
        alloc::vec![*a]
    }

    fn from_coords(&self, c: &[f64]) -> f64 {
        c[0]
    }

    fn in_cone(&self, a: &f64) -> bool {
        *a >= -tol::FUNCTION_CONE
    }

    fn norm(&self, a: &f64) -> f64 {
        a.abs()
    }
}

/// `0 ≤ a ≤ v`
pub fn in_unit_interval<V: OrderUnitSpace>(space: &V, a: &V::Vector) -> bool {
    space.in_cone(a) && space.leq(a, &space.order_unit())
}

/// The order-unit norm recomputed from cone tests alone, by bisection on
/// `λ` in `−λv ≤ a ≤ λv`. Used as an independent check of
/// [`OrderUnitSpace::norm`].
pub fn norm_by_bisection<V: OrderUnitSpace>(space: &V, a: &V::Vector, iterations: usize) -> f64 {
    let v = space.order_unit();
    let sandwiched = |l: f64| {
        let lv = space.scale(&v, l);
        space.leq(a, &lv) && space.leq(&space.scale(&lv, -1.0), a)
    };
    let mut hi = 1.0;
    while !sandwiched(hi) {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    if sandwiched(0.0) {
        return 0.0;
    }
    for _ in 0..iterations {
        let mid = 0.5 * (lo + hi);
        if sandwiched(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// The decomposition `a = b − c` with `b = ⌈‖a‖⌉v` and `c = b − a`, both
/// positive.
pub fn positive_decomposition<V: OrderUnitSpace>(
    space: &V,
    a: &V::Vector,
) -> (V::Vector, V::Vector) {
    let m = libm::ceil(space.norm(a));
    let b = space.scale(&space.order_unit(), m);
    let c = space.sub(&b, a);
    (b, c)
}

/// A random element of `V` with Gaussian coordinates.
pub fn random_vector<V: OrderUnitSpace, R: Rng + ?Sized>(space: &V, rng: &mut R) -> V::Vector {
    let c: Vec<f64> = (0..space.dimension()).map(|_| gaussian(rng)).collect();
    space.from_coords(&c)
}

/// A random effect `(a + ‖a‖v) / 2‖a‖` built from a random `a`.
pub fn random_effect<V: OrderUnitSpace, R: Rng + ?Sized>(space: &V, rng: &mut R) -> V::Vector {
    let a = random_vector(space, rng);
    let n = space.norm(&a);
    let v = space.order_unit();
    if n == 0.0 {
        return space.scale(&v, 0.5);
    }
    space.combine(0.5 / n, &a, 0.5, &v)
}

/// The positive linear map `ξ : V → W` determined by an effect-algebra
/// morphism `ω : E(V, v) → E(W, w)`.
pub struct EffectExtension<'a, V: OrderUnitSpace, W: OrderUnitSpace, F> {
    omega: F,
    source: &'a V,
    target: &'a W,
}

/// Spot-checks that `omega` is an effect-algebra morphism (unit preserved,
/// values in the unit interval, additive on `samples` random orthogonal
/// pairs) and returns its extension.
pub fn extend_effect_morphism<'a, V, W, F, R>(
    omega: F,
    source: &'a V,
    target: &'a W,
    rng: &mut R,
    samples: usize,
) -> Result<EffectExtension<'a, V, W, F>>
where
    V: OrderUnitSpace,
    W: OrderUnitSpace,
    F: Fn(&V::Vector) -> W::Vector,
    R: Rng + ?Sized,
{
    let close = |x: &W::Vector, y: &W::Vector| {
        target.distance(x, y) <= tol::REPORT * tol::scale(target.norm(x).max(target.norm(y)))
    };
    let v = source.order_unit();
    if !close(&omega(&v), &target.order_unit()) {
        return Err(Error::NotEffectMorphism("omega(v) differs from w".into()));
    }
    if !close(&omega(&source.zero()), &target.zero()) {
        return Err(Error::NotEffectMorphism("omega(0) differs from 0".into()));
    }
    for k in 0..samples {
        let e = random_effect(source, rng);
        let t: f64 = rng.random();
        // f = t(v − e) satisfies e + f ≤ v
        let f = source.scale(&source.sub(&v, &e), t);
        let (we, wf) = (omega(&e), omega(&f));
        if !in_unit_interval(target, &we) {
            return Err(Error::NotEffectMorphism(format!(
                "sample {k}: omega(e) is not an effect"
            )));
        }
        if !close(&omega(&source.add(&e, &f)), &target.add(&we, &wf)) {
            return Err(Error::NotEffectMorphism(format!(
                "sample {k}: omega(e + f) differs from omega(e) + omega(f)"
            )));
        }
    }
    Ok(EffectExtension {
        omega,
        source,
        target,
    })
}

impl<V, W, F> EffectExtension<'_, V, W, F>
where
    V: OrderUnitSpace,
    W: OrderUnitSpace,
    F: Fn(&V::Vector) -> W::Vector,
{
    pub fn omega(&self, e: &V::Vector) -> W::Vector {
        (self.omega)(e)
    }

    /// `ω⁺(x) = n ω(x/n)` for positive `x`, with `n = ⌈‖x‖⌉ + 1`.
    pub fn omega_plus(&self, x: &V::Vector) -> W::Vector {
        let n = libm::ceil(self.source.norm(x)) + 1.0;
        self.omega_plus_with(x, n)
            .expect("x/n is an effect for this n")
    }

    /// `n ω(x/n)` for any `n` with `x/n` in the unit interval.
    pub fn omega_plus_with(&self, x: &V::Vector, n: f64) -> Result<W::Vector> {
        let e = self.source.scale(x, 1.0 / n);
        if !in_unit_interval(self.source, &e) {
            return Err(Error::Invalid(format!("x/{n} is not an effect")));
        }
        Ok(self.target.scale(&(self.omega)(&e), n))
    }

    /// `ξ(a) = ω⁺(b) − ω⁺(c)` where `a = b − c`, `b = ⌈‖a‖⌉v`.
    pub fn apply(&self, a: &V::Vector) -> W::Vector {
        let (b, c) = positive_decomposition(self.source, a);
        self.target.sub(&self.omega_plus(&b), &self.omega_plus(&c))
    }

    /// `ξ` in coordinates: a `dim W × dim V` matrix.
    pub fn matrix(&self) -> Matrix {
        let (dv, dw) = (self.source.dimension(), self.target.dimension());
        let mut m = Matrix::zeros(dw, dv);
        for j in 0..dv {
            let mut unit = alloc::vec![0.0; dv];
            unit[j] = 1.0;
            let image = self
                .target
                .coords(&self.apply(&self.source.from_coords(&unit)));
            for (i, x) in image.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }
}
