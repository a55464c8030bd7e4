use alloc::vec::Vec;

use super::{abs, carrier, commutes, inverse, is_positive, sqrt, square, SynapticElement};
use crate::error::{Error, Result};
use crate::tol;

/// A linear subspace of a synaptic algebra, given by a basis orthonormal
/// under the algebra's trace pairing.
#[derive(Clone, Debug)]
pub struct Subspace<T> {
    unit: T,
    basis: Vec<T>,
}

/// Which closure conditions of a sub-synaptic algebra held on the tested
/// elements.
#[derive(Clone, Debug, PartialEq)]
pub struct SubalgebraReport {
    pub unit: bool,
    pub squares: bool,
    pub roots: bool,
    pub carriers: bool,
    pub inverses: bool,
    pub worst_residual: f64,
}

impl SubalgebraReport {
    pub fn holds(&self) -> bool {
        self.unit && self.squares && self.roots && self.carriers && self.inverses
    }
}

impl<T: SynapticElement> Subspace<T> {
    pub fn whole(unit: &T) -> Self {
        Subspace {
            unit: unit.unit(),
            basis: unit.basis(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[T] {
        &self.basis
    }

    /// Orthogonal projection of `x` onto the subspace.
    pub fn project(&self, x: &T) -> T {
        self.basis
            .iter()
            .fold(self.unit.zero(), |acc, b| acc.add(&b.scale(b.inner(x))))
    }

    pub fn residual(&self, x: &T) -> f64 {
        x.dist(&self.project(x))
    }

    pub fn contains(&self, x: &T) -> bool {
        self.residual(x) <= tol::RANK_REL * tol::scale(x.norm())
    }

    pub fn is_commutative(&self) -> bool {
        self.basis
            .iter()
            .enumerate()
            .all(|(i, a)| self.basis[i + 1..].iter().all(|b| commutes(a, b)))
    }

    /// Tests closure under `1`, squares, square roots of positives, carriers
    /// and inverses of elements `≥ 1` on the basis and on the projections of
    /// `samples` into the subspace.
    pub fn check_sub_synaptic(&self, samples: &[T]) -> SubalgebraReport {
        let mut worst = self.residual(&self.unit);
        let mut report = SubalgebraReport {
            unit: self.contains(&self.unit),
            squares: true,
            roots: true,
            carriers: true,
            inverses: true,
            worst_residual: 0.0,
        };
        let elements = self
            .basis
            .iter()
            .cloned()
            .chain(samples.iter().map(|s| self.project(s)));
        for x in elements {
            let mut probe = |ok: &mut bool, y: &T| {
                let r = self.residual(y);
                worst = worst.max(r);
                *ok &= r <= tol::RANK_REL * tol::scale(y.norm());
            };
            let sq = square(&x);
            probe(&mut report.squares, &sq);
            let positive = x.add_scalar(x.norm());
            if is_positive(&positive) {
                if let Ok(r) = sqrt(&positive) {
                    probe(&mut report.roots, &r);
                }
            }
            probe(&mut report.roots, &abs(&x));
            probe(&mut report.carriers, &carrier(&x));
            match inverse(&sq.add_scalar(1.0)) {
                Ok(inv) => probe(&mut report.inverses, &inv),
                Err(_) => report.inverses = false,
            }
        }
        report.worst_residual = worst;
        report
    }
}

fn check_members<T: SynapticElement>(unit: &T, set: &[T]) -> Result<()> {
    if set.iter().any(|b| !b.same_algebra(unit)) {
        return Err(Error::InstanceMismatch);
    }
    Ok(())
}

/// `C(B) = {a : ab = ba for all b ∈ B}`
pub fn commutant<T: SynapticElement>(unit: &T, set: &[T]) -> Result<Subspace<T>> {
    check_members(unit, set)?;
    Ok(Subspace {
        unit: unit.unit(),
        basis: unit.commutant_basis(set),
    })
}

/// `CC(B) = C(C(B))`
pub fn double_commutant<T: SynapticElement>(unit: &T, set: &[T]) -> Result<Subspace<T>> {
    let c = commutant(unit, set)?;
    commutant(unit, &c.basis)
}

/// The center `C(A)`.
pub fn center<T: SynapticElement>(unit: &T) -> Subspace<T> {
    let all = unit.basis();
    Subspace {
        unit: unit.unit(),
        basis: unit.commutant_basis(&all),
    }
}
