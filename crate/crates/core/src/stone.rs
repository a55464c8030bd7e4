//! Stone representation of finite Boolean algebras and the functional
//! representation of finite commutative synaptic algebras as function
//! algebras.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::{FinitePoset, Ortholattice};
use crate::synaptic::{self, FnElement, SymMatrix, SynapticElement};
use crate::tol;

/// A set of Stone points, as a bitmask over point indices.
pub type PointSet = u64;

/// Largest Boolean algebra accepted by [`enumerate_homomorphisms`].
pub const MAX_HOM_SCAN: usize = 16;

/// The Stone space of a finite Boolean algebra. Points are the atoms; the
/// point `x` is the homomorphism `b ↦ [x ≤ b]`.
#[derive(Clone, Debug)]
pub struct StoneSpace {
    algebra: Ortholattice,
    atoms: Vec<usize>,
}

/// Outcome of [`StoneSpace::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneReport {
    pub points: usize,
    pub homomorphisms: bool,
    pub injective: bool,
    pub surjective: bool,
    pub preserves_meet: bool,
    pub preserves_join: bool,
    pub preserves_complement: bool,
}

impl StoneReport {
    pub fn is_isomorphism(&self) -> bool {
        self.homomorphisms
            && self.injective
            && self.surjective
            && self.preserves_meet
            && self.preserves_join
            && self.preserves_complement
    }
}

/// `x(0) = 0`, `x(1) = 1`, and `x` preserves `∧`, `∨` and `⊥`.
pub fn is_homomorphism(b: &Ortholattice, x: &[bool]) -> bool {
    let n = b.len();
    if x[b.zero()] || !x[b.one()] {
        return false;
    }
    (0..n).all(|p| x[b.perp(p)] == !x[p])
        && (0..n).all(|p| {
            (0..n).all(|q| x[b.meet(p, q)] == (x[p] && x[q]) && x[b.join(p, q)] == (x[p] || x[q]))
        })
}

/// All homomorphisms `B → {0, 1}`, found by trying every subset of `B`.
pub fn enumerate_homomorphisms(b: &Ortholattice) -> Result<Vec<Vec<bool>>> {
    let n = b.len();
    if n > MAX_HOM_SCAN {
        return Err(Error::TooLarge(n, MAX_HOM_SCAN));
    }
    Ok((0u32..1 << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|x| is_homomorphism(b, x))
        .collect())
}

pub fn stone_space(b: &Ortholattice) -> Result<StoneSpace> {
    if !b.classify().is_boolean {
        return Err(Error::NotBoolean);
    }
    let atoms = b.poset().covers(b.zero());
    if atoms.len() > 64 {
        return Err(Error::TooLarge(atoms.len(), 64));
    }
    Ok(StoneSpace {
        algebra: b.clone(),
        atoms,
    })
}

impl StoneSpace {
    pub fn algebra(&self) -> &Ortholattice {
        &self.algebra
    }

    pub fn points(&self) -> &[usize] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// The homomorphism of point `x` as a truth table over `B`.
    pub fn homomorphism(&self, x: usize) -> Vec<bool> {
        (0..self.algebra.len())
            .map(|b| self.algebra.leq(self.atoms[x], b))
            .collect()
    }

    /// `K_b = {x : x(b) = 1}`
    pub fn stone_map(&self, b: usize) -> PointSet {
        self.atoms
            .iter()
            .enumerate()
            .filter(|&(_, &a)| self.algebra.leq(a, b))
            .fold(0, |m, (x, _)| m | 1 << x)
    }

    /// `ψ(b) = χ_{K_b}`
    pub fn indicator(&self, b: usize) -> FnElement {
        FnElement::indicator_mask(self.len(), self.stone_map(b))
    }

    /// Exhaustive check that every point is a homomorphism and that
    /// `b ↦ K_b` is a Boolean isomorphism onto all subsets of the points.
    pub fn verify(&self) -> StoneReport {
        let b = &self.algebra;
        let n = b.len();
        let k = self.len();
        let images: Vec<PointSet> = (0..n).map(|e| self.stone_map(e)).collect();
        let mut sorted = images.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let full: PointSet = if k == 64 { u64::MAX } else { (1 << k) - 1 };
        StoneReport {
            points: k,
            homomorphisms: (0..k).all(|x| is_homomorphism(b, &self.homomorphism(x))),
            injective: sorted.len() == n,
            surjective: k < 63 && sorted.len() == 1 << k && sorted.iter().all(|&s| s & !full == 0),
            preserves_meet: (0..n)
                .all(|p| (0..n).all(|q| images[b.meet(p, q)] == images[p] & images[q])),
            preserves_join: (0..n)
                .all(|p| (0..n).all(|q| images[b.join(p, q)] == images[p] | images[q])),
            preserves_complement: (0..n).all(|p| images[b.perp(p)] == full & !images[p]),
        }
    }
}

/// `Ψ : A → ℝ^X` for a commutative subalgebra `A` of `Sym(n)` spanned by
/// pairwise orthogonal nonzero projections `q₁, …, q_k` (the atoms of its
/// projection lattice): `Ψ(Σ λᵢ qᵢ) = (λ₁, …, λ_k)`.
#[derive(Clone, Debug)]
pub struct FunctionalRepresentation {
    n: usize,
    atoms: Vec<SymMatrix>,
}

/// Outcome of [`FunctionalRepresentation::verify`]; residuals are the
/// largest seen.
#[derive(Clone, Debug, PartialEq)]
pub struct RepresentationReport {
    pub additive: bool,
    pub multiplicative: bool,
    pub unital: bool,
    pub isometric: bool,
    pub order_isomorphism: bool,
    pub spectrum_preserved: bool,
    pub stone_map_agrees: bool,
    pub round_trip_residual: f64,
}

impl RepresentationReport {
    pub fn holds(&self) -> bool {
        self.additive
            && self.multiplicative
            && self.unital
            && self.isometric
            && self.order_isomorphism
            && self.spectrum_preserved
            && self.stone_map_agrees
            && self.round_trip_residual <= tol::REPORT
    }
}

/// Builds `Ψ` for the algebra generated by pairwise commuting symmetric
/// matrices: the atoms are the nonzero products of their eigenprojections.
/// An empty generator list gives `span{1}`.
pub fn functional_representation(
    n: usize,
    generators: &[SymMatrix],
) -> Result<FunctionalRepresentation> {
    if let Some(g) = generators.iter().find(|g| g.n() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: g.n(),
        });
    }
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            if !synaptic::commutes(&generators[i], &generators[j]) {
                return Err(Error::NotCommutative(i, j));
            }
        }
    }
    let mut atoms = vec![SymMatrix::identity(n)];
    for g in generators {
        let mut refined = Vec::new();
        for (_, p) in g.spectral_clusters() {
            for a in &atoms {
                let r = a.jordan_unchecked(&p);
                if r.trace() > 0.5 {
                    refined.push(r);
                }
            }
        }
        atoms = refined;
    }
    Ok(FunctionalRepresentation { n, atoms })
}

impl FunctionalRepresentation {
    pub fn points(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[SymMatrix] {
        &self.atoms
    }

    /// `Ψ(a)(xᵢ) = tr(a qᵢ) / tr(qᵢ)`
    pub fn psi(&self, a: &SymMatrix) -> FnElement {
        FnElement::new(self.atoms.iter().map(|q| a.inner(q) / q.trace()).collect())
    }

    /// [`psi`](Self::psi) after checking that `a` lies in the algebra.
    pub fn psi_checked(&self, a: &SymMatrix) -> Result<FnElement> {
        if a.n() != self.n {
            return Err(Error::InstanceMismatch);
        }
        let f = self.psi(a);
        if self.psi_inverse(&f).dist(a) > tol::RANK_REL * tol::scale(a.norm()) {
            return Err(Error::NotInAlgebra);
        }
        Ok(f)
    }

    /// `Ψ⁻¹(f) = Σ f(xᵢ) qᵢ`
    pub fn psi_inverse(&self, f: &FnElement) -> SymMatrix {
        self.atoms
            .iter()
            .zip(f.values())
            .fold(SymMatrix::zeros(self.n), |acc, (q, &x)| {
                acc.add(&q.scale(x))
            })
    }

    /// The projection `Σ_{i ∈ S} qᵢ` for a set `S` of points.
    pub fn projection(&self, set: PointSet) -> SymMatrix {
        self.psi_inverse(&FnElement::indicator_mask(self.points(), set))
    }

    /// The projection lattice `P(A)` as an ortholattice whose elements are
    /// indexed by point sets, with the order computed from the matrices.
    pub fn projection_lattice(&self) -> Result<Ortholattice> {
        let k = self.points();
        if k > 10 {
            return Err(Error::TooLarge(k, 10));
        }
        let m = 1usize << k;
        let projections: Vec<SymMatrix> = (0..m).map(|s| self.projection(s as PointSet)).collect();
        let mut leq = vec![false; m * m];
        for a in 0..m {
            for b in 0..m {
                leq[a * m + b] = synaptic::leq(&projections[a], &projections[b])?;
            }
        }
        let poset = FinitePoset::from_relation(m, leq)?;
        let one = SymMatrix::identity(self.n);
        let perp = (0..m)
            .map(|a| {
                let c = one.sub(&projections[a]);
                (0..m)
                    .find(|&b| projections[b].dist(&c) <= tol::RANK_REL)
                    .ok_or(Error::NotProjection)
            })
            .collect::<Result<Vec<usize>>>()?;
        Ortholattice::new(poset, perp)
    }

    /// A state `ρ(a) = tr(Da)` on `A` seen on `ℝ^X`: `μ(xᵢ) = tr(D qᵢ)`.
    pub fn transport_state(&self, density: &SymMatrix) -> Vec<f64> {
        self.atoms.iter().map(|q| density.inner(q)).collect()
    }

    /// A density matrix inducing the state `μ` on `A`.
    pub fn density_for(&self, mu: &[f64]) -> SymMatrix {
        self.atoms
            .iter()
            .zip(mu)
            .fold(SymMatrix::zeros(self.n), |acc, (q, &m)| {
                acc.add(&q.scale(m / q.trace()))
            })
    }

    /// Checks the isomorphism properties on `samples` (elements of `A`),
    /// and that `ψ` agrees with the Stone map of `P(A)`.
    pub fn verify(&self, samples: &[SymMatrix]) -> Result<RepresentationReport> {
        let close = |x: &FnElement, y: &FnElement, s: f64| x.dist(y) <= tol::REPORT * tol::scale(s);
        let mut r = RepresentationReport {
            additive: true,
            multiplicative: true,
            unital: close(
                &self.psi(&SymMatrix::identity(self.n)),
                &FnElement::constant(self.points(), 1.0),
                1.0,
            ),
            isometric: true,
            order_isomorphism: true,
            spectrum_preserved: true,
            stone_map_agrees: true,
            round_trip_residual: 0.0,
        };
        let images: Vec<FnElement> = samples
            .iter()
            .map(|a| self.psi_checked(a))
            .collect::<Result<_>>()?;
        for (i, (a, fa)) in samples.iter().zip(&images).enumerate() {
            let size = a.norm();
            r.round_trip_residual = r
                .round_trip_residual
                .max(self.psi_inverse(fa).dist(a) / tol::scale(size));
            r.isometric &= (fa.norm() - size).abs() <= tol::REPORT * tol::scale(size);
            let spec_a = synaptic::spectrum(a);
            let spec_f = synaptic::spectrum(fa);
            r.spectrum_preserved &= spec_a.len() == spec_f.len()
                && spec_a
                    .iter()
                    .zip(&spec_f)
                    .all(|(x, y)| (x - y).abs() <= tol::REPORT * tol::scale(size));
            r.order_isomorphism &= synaptic::is_positive(a) == synaptic::is_positive(fa);
            for (b, fb) in samples[i..].iter().zip(&images[i..]) {
                let s = size.max(b.norm());
                r.additive &= close(&self.psi(&a.add(b)), &fa.add(fb), s);
                r.multiplicative &= close(&self.psi(&a.jordan_unchecked(b)), &fa.mul(fb), s * s);
                r.order_isomorphism &= synaptic::leq(a, b)? == synaptic::leq(fa, fb)?;
            }
        }
        let lattice = self.projection_lattice()?;
        let stone = stone_space(&lattice)?;
        // Stone points are the singleton point sets; relabel K_b accordingly
        let relabel = |set: PointSet| -> PointSet {
            stone
                .points()
                .iter()
                .enumerate()
                .filter(|&(_, &atom)| set >> atom.trailing_zeros() & 1 == 1)
                .fold(0, |m, (x, _)| m | 1 << x)
        };
        let singleton_atoms = stone.points().iter().all(|a| a.count_ones() == 1);
        r.stone_map_agrees = singleton_atoms
            && stone.points().len() == self.points()
            && (0..lattice.len()).all(|b| {
                let psi = self.psi(&self.projection(b as PointSet));
                let support = psi
                    .values()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| (v - 1.0).abs() <= tol::REPORT)
                    .fold(0, |m: PointSet, (i, _)| m | 1 << i);
                relabel(support) == stone.stone_map(b)
            });
        Ok(r)
    }
}

/// Finite checks of the Rickart property and completeness of `ℝ^X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RickartReport {
    pub points: usize,
    /// `fg = 0 ⇔ g = pg` with `p = 1 − χ_{supp f}`, on every tested pair.
    pub rickart: bool,
    pub pairs_tested: usize,
    /// `P(X, ℝ)` is a Boolean algebra.
    pub projections_boolean: bool,
    /// Every subset of `P(X, ℝ)` has an infimum and supremum.
    pub projections_complete: bool,
    /// Every bounded ascending sequence of indicators is eventually
    /// constant and its last term is the supremum.
    pub monotone_complete: bool,
}

impl RickartReport {
    pub fn holds(&self) -> bool {
        self.rickart
            && self.projections_boolean
            && self.projections_complete
            && self.monotone_complete
    }
}

/// The annihilating projection `1 − χ_{supp f}`.
pub fn rickart_projection(f: &FnElement) -> FnElement {
    f.map(|x| if x == 0.0 { 1.0 } else { 0.0 })
}

/// Tests the Rickart biconditional for every `f` in `functions` (plus `0`)
/// against every indicator of a subset of `X` and every `g` in
/// `functions`; `|X| ≤ 10`.
pub fn check_rickart(points: usize, functions: &[FnElement]) -> Result<RickartReport> {
    if points > 10 {
        return Err(Error::TooLarge(points, 10));
    }
    if functions.iter().any(|f| f.len() != points) {
        return Err(Error::InstanceMismatch);
    }
    let indicators: Vec<FnElement> = (0..1u64 << points)
        .map(|m| FnElement::indicator_mask(points, m))
        .collect();
    let tests: Vec<&FnElement> = indicators.iter().chain(functions).collect();
    let zero = FnElement::constant(points, 0.0);
    let mut rickart = true;
    let mut pairs = 0;
    for f in core::iter::once(&zero).chain(functions) {
        let p = rickart_projection(f);
        for g in &tests {
            let annihilates = f.mul(g).values().iter().all(|&x| x == 0.0);
            let absorbed = p.mul(g) == **g;
            rickart &= annihilates == absorbed;
            pairs += 1;
        }
    }
    let lattice = crate::catalog::boolean_algebra(points);
    let class = lattice.classify();
    // an ascending chain of indicators stabilizes after at most |X| strict steps
    let monotone_complete = (0..=points).all(|k| {
        let chain: Vec<usize> = (0..=k).map(|j| (1 << j) - 1).collect();
        let order = lattice.poset();
        order.least(&order.upper_bounds(&chain)) == chain.last().copied()
    });
    Ok(RickartReport {
        points,
        rickart,
        pairs_tested: pairs,
        projections_boolean: class.is_boolean,
        projections_complete: class.is_lattice_complete,
        monotone_complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn stone_examples() {
        let s = stone_space(&catalog::boolean_algebra(3)).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.stone_map(s.points()[0]).count_ones(), 1);
        assert!(s.verify().is_isomorphism());

        let b1 = catalog::boolean_algebra(1);
        let s = stone_space(&b1).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.stone_map(b1.one()), 1);
        assert_eq!(s.stone_map(b1.zero()), 0);

        let b2 = catalog::boolean_algebra(2);
        let s = stone_space(&b2).unwrap();
        let (a, ap) = (1, b2.perp(1));
        assert_eq!(s.stone_map(a) & s.stone_map(ap), 0);
        assert_eq!(s.stone_map(a) | s.stone_map(ap), 0b11);

        assert_eq!(stone_space(&catalog::mo2()).unwrap_err(), Error::NotBoolean);
    }

    #[test]
    fn homomorphisms_are_atoms() {
        let b = catalog::boolean_algebra(3);
        let homs = enumerate_homomorphisms(&b).unwrap();
        let s = stone_space(&b).unwrap();
        assert_eq!(homs.len(), 3);
        for x in 0..3 {
            assert!(homs.contains(&s.homomorphism(x)));
        }
    }

    #[test]
    fn diagonal_representation() {
        let a = SymMatrix::from_diagonal(&[1., 2., 3.]);
        let rep = functional_representation(3, &[a.clone()]).unwrap();
        assert_eq!(rep.points(), 3);
        assert_eq!(rep.psi(&a).values(), &[1., 2., 3.]);
        let b = SymMatrix::from_diagonal(&[-1., 0.5, 4.]);
        assert!(rep.verify(&[a, b]).unwrap().holds());

        let unit = functional_representation(3, &[]).unwrap();
        assert_eq!(unit.points(), 1);
        assert_eq!(
            unit.psi(&SymMatrix::identity(3).scale(2.5)).values(),
            &[2.5]
        );
        assert_eq!(
            unit.psi_checked(&SymMatrix::from_diagonal(&[1., 0., 0.]))
                .unwrap_err(),
            Error::NotInAlgebra
        );

        let skew = SymMatrix::new(3, alloc::vec![0., 1., 0., 1., 0., 0., 0., 0., 0.]).unwrap();
        assert_eq!(
            functional_representation(3, &[SymMatrix::from_diagonal(&[1., 2., 3.]), skew])
                .unwrap_err(),
            Error::NotCommutative(0, 1)
        );
    }

    #[test]
    fn rickart_examples() {
        let f = FnElement::new(alloc::vec![2., 0., 0.]);
        assert_eq!(rickart_projection(&f).values(), &[0., 1., 1.]);
        assert_eq!(
            rickart_projection(&FnElement::constant(3, 0.0)),
            FnElement::constant(3, 1.0)
        );
        assert!(check_rickart(3, &[f]).unwrap().holds());
    }
}
