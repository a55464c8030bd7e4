use alloc::vec;
use alloc::vec::Vec;

use super::SynapticElement;
use crate::tol;

/// A real function on the finite set `{0, …, n-1}`. Every operation is
/// pointwise and exact.
#[derive(Clone, Debug, PartialEq)]
pub struct FnElement {
    values: Vec<f64>,
}

impl FnElement {
    pub fn new(values: Vec<f64>) -> Self {
        FnElement { values }
    }

    pub fn constant(n: usize, c: f64) -> Self {
        FnElement { values: vec![c; n] }
    }

    /// Indicator of a set of points.
    pub fn indicator(n: usize, points: &[usize]) -> Self {
        let mut v = vec![0.0; n];
        for &p in points {
            v[p] = 1.0;
        }
        FnElement { values: v }
    }

    /// Indicator of a set of points given as a bitmask.
    pub fn indicator_mask(n: usize, mask: u64) -> Self {
        FnElement {
            values: (0..n)
                .map(|i| if mask >> i & 1 == 1 { 1.0 } else { 0.0 })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn at(&self, x: usize) -> f64 {
        self.values[x]
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a * b)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        FnElement {
            values: self.values.iter().map(|&a| f(a)).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.len(), other.len(), "functions on different sets");
        FnElement {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl SynapticElement for FnElement {
    fn same_algebra(&self, other: &Self) -> bool {
        self.len() == other.len()
    }

    fn unit(&self) -> Self {
        Self::constant(self.len(), 1.0)
    }

    fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn scale(&self, t: f64) -> Self {
        self.map(|a| a * t)
    }

    fn jordan_unchecked(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn product_size(&self, other: &Self) -> f64 {
        self.mul(other).norm()
    }

    fn commutator_size(&self, _other: &Self) -> f64 {
        0.0
    }

    fn spectral_clusters(&self) -> Vec<(f64, Self)> {
        let mut distinct: Vec<f64> = self.values.clone();
        distinct.sort_by(f64::total_cmp);
        distinct.dedup_by(|a, b| a == b);
        distinct
            .into_iter()
            .map(|l| (l, self.map(|a| if a == l { 1.0 } else { 0.0 })))
            .collect()
    }

    fn norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, a| m.max(a.abs()))
    }

    fn inner(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .sum()
    }

    fn basis(&self) -> Vec<Self> {
        (0..self.len())
            .map(|i| Self::indicator(self.len(), &[i]))
            .collect()
    }

    fn rank_tolerance(&self) -> f64 {
        0.0
    }

    fn cone_tolerance(&self) -> f64 {
        tol::FUNCTION_CONE
    }

    fn range_meet(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn commutant_basis(&self, _set: &[Self]) -> Vec<Self> {
        self.basis()
    }
}
