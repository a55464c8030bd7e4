use alloc::vec::Vec;
use core::fmt;

use super::{carrier, commutes, square, SynapticElement};
use crate::tol;

/// The four defining conditions of a synaptic morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismCondition {
    /// `φ(1) = 1`
    Unit,
    /// `φ(a²) = φ(a)²`
    Squares,
    /// `aCb ⇒ φ(a)Cφ(b)`
    Commutation,
    /// `φ(a†) = φ(a)†`
    Carriers,
}

impl fmt::Display for MorphismCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphismCondition::Unit => "(1) phi(1) = 1",
            MorphismCondition::Squares => "(2) phi(a^2) = phi(a)^2",
            MorphismCondition::Commutation => "(3) aCb => phi(a)Cphi(b)",
            MorphismCondition::Carriers => "(4) phi(carrier a) = carrier phi(a)",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SynapticMorphismReport {
    /// The first failed condition, with indices into the tested elements
    /// (canonical basis first, then the samples).
    pub violation: Option<(MorphismCondition, Vec<usize>)>,
    pub tested: usize,
}

impl SynapticMorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.violation.is_none()
    }
}

fn close<T: SynapticElement>(a: &T, b: &T) -> bool {
    a.dist(b) <= tol::RANK_REL * tol::scale(a.norm().max(b.norm()))
}

/// Checks conditions (1) to (4) for `phi` on the canonical basis of the
/// source algebra followed by `samples`, in that order, and reports the first
/// violation.
pub fn check_synaptic_morphism<S, T>(
    phi: impl Fn(&S) -> T,
    source_unit: &S,
    samples: &[S],
) -> SynapticMorphismReport
where
    S: SynapticElement,
    T: SynapticElement,
{
    let elements: Vec<S> = source_unit
        .basis()
        .into_iter()
        .chain(samples.iter().cloned())
        .collect();
    let images: Vec<T> = elements.iter().map(&phi).collect();
    let tested = elements.len();
    let fail = |c, w: Vec<usize>| SynapticMorphismReport {
        violation: Some((c, w)),
        tested,
    };

    let one = phi(&source_unit.unit());
    if !close(&one, &one.unit()) {
        return fail(MorphismCondition::Unit, Vec::new());
    }
    for (i, (a, pa)) in elements.iter().zip(&images).enumerate() {
        if !close(&phi(&square(a)), &square(pa)) {
            return fail(MorphismCondition::Squares, alloc::vec![i]);
        }
    }
    for i in 0..tested {
        for j in i + 1..tested {
            if commutes(&elements[i], &elements[j]) && !commutes(&images[i], &images[j]) {
                return fail(MorphismCondition::Commutation, alloc::vec![i, j]);
            }
        }
    }
    for (i, (a, pa)) in elements.iter().zip(&images).enumerate() {
        if !close(&phi(&carrier(a)), &carrier(pa)) {
            return fail(MorphismCondition::Carriers, alloc::vec![i]);
        }
    }
    SynapticMorphismReport {
        violation: None,
        tested,
    }
}
