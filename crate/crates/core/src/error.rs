use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("elements belong to different algebras")]
    InstanceMismatch,
    #[error("not in positive cone")]
    NotPositive,
    #[error("not invertible")]
    NotInvertible,
    #[error("not a projection")]
    NotProjection,
    #[error("mesh must be positive, got {0}")]
    NonPositiveMesh(f64),
    #[error("empty subset")]
    EmptySubset,
    #[error("no orthocomplementation")]
    NoOrthocomplement,
    #[error("input is not an OML")]
    NotOml,
    #[error("input is not a Boolean algebra")]
    NotBoolean,
    #[error("input is not an MV-effect algebra")]
    NotMvEffectAlgebra,
    #[error("not an effect morphism: {0}")]
    NotEffectMorphism(String),
    #[error("commutative algebras only (generators {0} and {1} do not commute)")]
    NotCommutative(usize, usize),
    #[error("matrix is not symmetric (asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("structure has {0} elements, more than the limit of {1}")]
    TooLarge(usize, usize),
    #[error("not a spectral resolution: {0}")]
    NotResolution(&'static str),
    #[error("element does not belong to the algebra")]
    NotInAlgebra,
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("axiom violated: {0}")]
    Axiom(AxiomViolation),
}

/// The named laws checked by the exhaustive table validators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
    Lattice,
    Bounded,
    Involution,
    OrderReversing,
    Complementation,
    EaCommutativity,
    EaAssociativity,
    EaOrthosupplementation,
    EaZeroOne,
    EaCancellation,
    MvAssociativity,
    MvCommutativity,
    MvZero,
    MvInvolution,
    MvZeroPerp,
    MvComplement,
    MvLukasiewicz,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::Lattice => "lattice",
            Axiom::Bounded => "bounded",
            Axiom::Involution => "involution",
            Axiom::OrderReversing => "order-reversing",
            Axiom::Complementation => "complementation",
            Axiom::EaCommutativity => "commutativity",
            Axiom::EaAssociativity => "associativity",
            Axiom::EaOrthosupplementation => "orthosupplementation",
            Axiom::EaZeroOne => "zero-one law",
            Axiom::EaCancellation => "cancelation",
            Axiom::MvAssociativity => "mv(1) associativity",
            Axiom::MvCommutativity => "mv(2) commutativity",
            Axiom::MvZero => "mv(3) x+0=x",
            Axiom::MvInvolution => "mv(4) x''=x",
            Axiom::MvZeroPerp => "mv(5) 0'=1",
            Axiom::MvComplement => "mv(6) x+x'=1",
            Axiom::MvLukasiewicz => "mv(7) x+(x+y')'=y+(y+x')'",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First violated law found by an exhaustive scan, with the element indices
/// that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl AxiomViolation {
    pub fn new(axiom: Axiom, witness: &[usize]) -> Self {
        AxiomViolation {
            axiom,
            witness: witness.to_vec(),
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (witness {:?})", self.axiom, self.witness)
    }
}

impl From<AxiomViolation> for Error {
    fn from(v: AxiomViolation) -> Self {
        Error::Axiom(v)
    }
}
