//! Finite-scale models of the quantum-structure hierarchy: partially ordered
//! sets and orthomodular lattices, effect algebras, MV-algebras, order-unit
//! normed spaces, synaptic algebras over real symmetric matrices and finite
//! function algebras, and the state spaces of all of these.
//!
//! Every structure here is small enough that its defining laws can be checked
//! exhaustively (combinatorial structures) or to a pinned floating-point
//! tolerance (the numeric instances, see [`tol`]). The crate is `no_std` and
//! only needs `alloc`; IO, file formats and the command line live in the
//! `synaptica` crate.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod effect;
pub mod error;
pub mod linalg;
pub mod mv;
pub mod order_unit;
pub mod polytope;
pub mod poset;
pub mod sample;
pub mod state;
pub mod stone;
pub mod synaptic;
pub mod tol;

pub use effect::{EffectAlgebra, EffectTable};
pub use error::{Axiom, AxiomViolation, Error, Result};
pub use mv::{MvAlgebra, MvTable};
pub use poset::{Classification, FinitePoset, Ortholattice};
pub use synaptic::{FnElement, SymMatrix, SynapticElement};
