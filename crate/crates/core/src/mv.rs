//! Finite MV-algebras and their equivalence with MV-effect algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::effect::{check_ea_axioms_with_limit, EffectAlgebra, EffectTable};
use crate::error::{Axiom, AxiomViolation, Error, Result};
use crate::poset::FinitePoset;

/// A candidate MV-algebra `(M; 0, 1, ⊥, +)` with a total `+` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvTable {
    pub labels: Vec<String>,
    pub zero: usize,
    pub one: usize,
    /// Row-major `n * n`.
    pub plus: Vec<usize>,
    pub perp: Vec<usize>,
}

impl MvTable {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.plus[x * self.len() + y]
    }

    /// `x + (x + y^⊥)^⊥`, which is `x ∨ y`.
    pub fn lukasiewicz(&self, x: usize, y: usize) -> usize {
        self.add(x, self.perp[self.add(x, self.perp[y])])
    }

    /// Sizes and index ranges of the tables.
    pub fn check_shape(&self) -> Result<()> {
        let n = self.len();
        if n == 0 {
            return Err(Error::Invalid("an MV-algebra must be nonempty".into()));
        }
        if self.plus.len() != n * n || self.perp.len() != n {
            return Err(Error::Invalid("MV tables have the wrong size".into()));
        }
        if self.zero >= n || self.one >= n {
            return Err(Error::Invalid("zero or one out of range".into()));
        }
        if let Some(bad) = self.plus.iter().chain(&self.perp).find(|&&x| x >= n) {
            return Err(Error::Invalid(format!("table entry {bad} out of range")));
        }
        Ok(())
    }

    /// The MV-algebra laws (1) to (7) in scan order.
    pub const AXIOMS: [Axiom; 7] = [
        Axiom::MvAssociativity,
        Axiom::MvCommutativity,
        Axiom::MvZero,
        Axiom::MvInvolution,
        Axiom::MvZeroPerp,
        Axiom::MvComplement,
        Axiom::MvLukasiewicz,
    ];

    /// First violated MV axiom, scanning axioms (1) to (7) in order.
    pub fn first_violation(&self) -> Option<AxiomViolation> {
        Self::AXIOMS.iter().find_map(|&a| self.violation_of(a))
    }

    /// First witness against one law, or `None` when it holds.
    pub fn violation_of(&self, axiom: Axiom) -> Option<AxiomViolation> {
        let n = self.len();
        let p = &self.perp;
        let found = |w: &[usize]| Some(AxiomViolation::new(axiom, w));
        match axiom {
            Axiom::MvAssociativity => {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            if self.add(x, self.add(y, z)) != self.add(self.add(x, y), z) {
                                return found(&[x, y, z]);
                            }
                        }
                    }
                }
            }
            Axiom::MvCommutativity => {
                for x in 0..n {
                    for y in 0..n {
                        if self.add(x, y) != self.add(y, x) {
                            return found(&[x, y]);
                        }
                    }
                }
            }
            Axiom::MvZero => {
                if let Some(x) = (0..n).find(|&x| self.add(x, self.zero) != x) {
                    return found(&[x]);
                }
            }
            Axiom::MvInvolution => {
                if let Some(x) = (0..n).find(|&x| p[p[x]] != x) {
                    return found(&[x]);
                }
            }
            Axiom::MvZeroPerp => {
                if p[self.zero] != self.one {
                    return found(&[self.zero]);
                }
            }
            Axiom::MvComplement => {
                if let Some(x) = (0..n).find(|&x| self.add(x, p[x]) != self.one) {
                    return found(&[x]);
                }
            }
            Axiom::MvLukasiewicz => {
                for x in 0..n {
                    for y in 0..n {
                        if self.lukasiewicz(x, y) != self.lukasiewicz(y, x) {
                            return found(&[x, y]);
                        }
                    }
                }
            }
            _ => {}
        }
        None
    }
}

pub fn check_mv_axioms(table: &MvTable) -> Result<MvAlgebra> {
    table.check_shape()?;
    match table.first_violation() {
        Some(v) => Err(v.into()),
        None => Ok(MvAlgebra {
            table: table.clone(),
        }),
    }
}

/// A validated finite MV-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvAlgebra {
    table: MvTable,
}

impl MvAlgebra {
    pub fn table(&self) -> &MvTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.table.add(x, y)
    }

    pub fn perp(&self, x: usize) -> usize {
        self.table.perp[x]
    }

    /// `x ≤ y ⇔ y = x + (x + y^⊥)^⊥`
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.table.lukasiewicz(x, y) == y
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.table.lukasiewicz(x, y)
    }

    pub fn order(&self) -> FinitePoset {
        let n = self.len();
        let leq = (0..n * n).map(|i| self.leq(i / n, i % n)).collect();
        FinitePoset::from_relation(n, leq)
            .and_then(|p| p.with_labels(self.table.labels.clone()))
            .expect("the order of a validated MV-algebra is a partial order")
    }

    /// `x + x = x` for every `x`.
    pub fn is_boolean(&self) -> bool {
        (0..self.len()).all(|x| self.add(x, x) == x)
    }
}

/// `e + f := e ⊕ (e^⊥ ∧ f)`, defined on MV-effect algebras only.
pub fn ea_to_mv(e: &EffectAlgebra) -> Result<MvAlgebra> {
    if !e.is_mv_effect_algebra() {
        return Err(Error::NotMvEffectAlgebra);
    }
    let order = e.induced_order();
    let n = e.len();
    let mut plus = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let m = order
                .meet(e.perp(x), y)
                .expect("MV-effect algebras are lattice ordered");
            plus[x * n + y] = e
                .osum(x, m)
                .expect("x is orthogonal to x^⊥ ∧ y since the latter is below x^⊥");
        }
    }
    let table = MvTable {
        labels: e.labels().to_vec(),
        zero: e.zero(),
        one: e.one(),
        plus,
        perp: (0..n).map(|x| e.perp(x)).collect(),
    };
    check_mv_axioms(&table)
}

/// `x ⊕ y := x + y` when `x ≤ y^⊥` in the MV order.
pub fn mv_to_ea(m: &MvAlgebra) -> Result<EffectAlgebra> {
    let n = m.len();
    let mut table = EffectTable {
        labels: m.table.labels.clone(),
        zero: m.table.zero,
        one: m.table.one,
        osum: vec![None; n * n],
    };
    for x in 0..n {
        for y in 0..n {
            if m.leq(x, m.perp(y)) {
                table.set(x, y, Some(m.add(x, y)));
            }
        }
    }
    check_ea_axioms_with_limit(&table, usize::MAX)
}
