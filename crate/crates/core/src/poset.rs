//! Finite posets, bounded ortholattices and their classification predicates.
//!
//! Elements are indices `0..n`; the order is a dense boolean matrix. Absence
//! of a meet or join is a normal answer (`None`), since non-lattice posets are
//! legitimate inputs.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Axiom, AxiomViolation, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
    labels: Vec<String>,
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl FinitePoset {
    /// Builds a poset from a full relation matrix (row-major, `n * n`),
    /// checking reflexivity, antisymmetry and transitivity.
    pub fn from_relation(n: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                found: leq.len(),
            });
        }
        if n == 0 {
            return Err(Error::Invalid("a poset must be nonempty".into()));
        }
        let p = FinitePoset {
            n,
            leq,
            labels: default_labels(n),
        };
        if let Some(v) = p.relation_violation() {
            return Err(v.into());
        }
        Ok(p)
    }

    /// Builds a poset from generating pairs `(a, b)` meaning `a ≤ b`; the
    /// reflexive-transitive closure is taken, then antisymmetry is checked.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Invalid(format!("pair ({a}, {b}) out of range")));
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        FinitePoset::from_relation(n, leq)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: labels.len(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Invalid(format!("duplicate label {l:?}")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    fn relation_violation(&self) -> Option<AxiomViolation> {
        let n = self.n;
        for i in 0..n {
            if !self.leq(i, i) {
                return Some(AxiomViolation::new(Axiom::Reflexivity, &[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Some(AxiomViolation::new(Axiom::Antisymmetry, &[i, j]));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Some(AxiomViolation::new(Axiom::Transitivity, &[i, j, k]));
                    }
                }
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    pub fn upper_bounds(&self, q: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| q.iter().all(|&x| self.leq(x, b)))
            .collect()
    }

    pub fn lower_bounds(&self, q: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| q.iter().all(|&x| self.leq(a, x)))
            .collect()
    }

    /// Least element of `set`, if any.
    pub fn least(&self, set: &[usize]) -> Option<usize> {
        set.iter()
            .copied()
            .find(|&a| set.iter().all(|&b| self.leq(a, b)))
    }

    /// Greatest element of `set`, if any.
    pub fn greatest(&self, set: &[usize]) -> Option<usize> {
        set.iter()
            .copied()
            .find(|&a| set.iter().all(|&b| self.leq(b, a)))
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.greatest(&self.lower_bounds(&[a, b]))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.least(&self.upper_bounds(&[a, b]))
    }

    /// `(⋀Q, ⋁Q)`, each `None` when it does not exist.
    pub fn subset_inf_sup(&self, q: &[usize]) -> Result<(Option<usize>, Option<usize>)> {
        if q.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&bad) = q.iter().find(|&&x| x >= self.n) {
            return Err(Error::Invalid(format!("element {bad} out of range")));
        }
        Ok((
            self.greatest(&self.lower_bounds(q)),
            self.least(&self.upper_bounds(q)),
        ))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&a| (0..self.n).all(|b| self.leq(a, b)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&a| (0..self.n).all(|b| self.leq(b, a)))
    }

    /// Elements covering `a`.
    pub fn covers(&self, a: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| self.lt(a, b) && !(0..self.n).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }

    /// Meet and join tables (row-major, `None` when absent).
    pub fn operation_tables(&self) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let n = self.n;
        let mut meets = vec![None; n * n];
        let mut joins = vec![None; n * n];
        for a in 0..n {
            for b in a..n {
                let m = self.meet(a, b);
                let j = self.join(a, b);
                meets[a * n + b] = m;
                meets[b * n + a] = m;
                joins[a * n + b] = j;
                joins[b * n + a] = j;
            }
        }
        (meets, joins)
    }

    pub fn classify(&self) -> Classification {
        let n = self.n;
        let (meets, joins) = self.operation_tables();
        let is_lattice = meets.iter().all(Option::is_some) && joins.iter().all(Option::is_some);
        let bottom = self.bottom();
        let top = self.top();
        let is_bounded = bottom.is_some() && top.is_some();

        let is_distributive = is_lattice && {
            let m = |a: usize, b: usize| meets[a * n + b].unwrap();
            let j = |a: usize, b: usize| joins[a * n + b].unwrap();
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(a, j(b, c)) == j(m(a, b), m(a, c)))))
        };
        let is_complemented = is_lattice
            && is_bounded
            && (0..n)
                .all(|a| (0..n).any(|b| meets[a * n + b] == bottom && joins[a * n + b] == top));

        let is_upward_directed =
            (0..n).all(|a| (0..n).all(|b| !self.upper_bounds(&[a, b]).is_empty()));
        let is_downward_directed =
            (0..n).all(|a| (0..n).all(|b| !self.lower_bounds(&[a, b]).is_empty()));

        // On a finite poset every sequence has finite range, so the sequential
        // completeness notions reduce to statements about finite subsets.
        let is_dedekind_sigma_complete = (0..n).all(|a| {
            (0..n).all(|b| {
                (self.upper_bounds(&[a, b]).is_empty() || joins[a * n + b].is_some())
                    && (self.lower_bounds(&[a, b]).is_empty() || meets[a * n + b].is_some())
            })
        });

        Classification {
            is_lattice,
            is_bounded,
            is_distributive,
            is_complemented,
            is_boolean: is_distributive && is_complemented,
            is_oml: None,
            is_upward_directed,
            is_downward_directed,
            is_directed: is_upward_directed && is_downward_directed,
            is_lattice_complete: is_lattice && is_bounded,
            is_sigma_complete: is_lattice,
            is_dedekind_sigma_complete,
            is_monotone_sigma_complete: true,
        }
    }
}

/// Classification flags for a finite poset (and, for ortholattices, the
/// orthomodularity flag).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_lattice: bool,
    pub is_bounded: bool,
    pub is_distributive: bool,
    pub is_complemented: bool,
    pub is_boolean: bool,
    /// `None` when the structure carries no orthocomplementation.
    pub is_oml: Option<bool>,
    pub is_upward_directed: bool,
    pub is_downward_directed: bool,
    pub is_directed: bool,
    pub is_lattice_complete: bool,
    pub is_sigma_complete: bool,
    pub is_dedekind_sigma_complete: bool,
    pub is_monotone_sigma_complete: bool,
}

impl Classification {
    pub fn oml(&self) -> Result<bool> {
        self.is_oml.ok_or(Error::NoOrthocomplement)
    }
}

/// A bounded lattice with an orthocomplementation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ortholattice {
    poset: FinitePoset,
    zero: usize,
    one: usize,
    perp: Vec<usize>,
    meets: Vec<usize>,
    joins: Vec<usize>,
}

impl Ortholattice {
    pub fn new(poset: FinitePoset, perp: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if perp.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: perp.len(),
            });
        }
        if let Some(&bad) = perp.iter().find(|&&x| x >= n) {
            return Err(Error::Invalid(format!(
                "orthocomplement {bad} out of range"
            )));
        }
        let (meets, joins) = poset.operation_tables();
        if let Some(i) = (0..n * n).find(|&i| meets[i].is_none() || joins[i].is_none()) {
            return Err(AxiomViolation::new(Axiom::Lattice, &[i / n, i % n]).into());
        }
        let zero = poset
            .bottom()
            .ok_or_else(|| Error::from(AxiomViolation::new(Axiom::Bounded, &[])))?;
        let one = poset
            .top()
            .ok_or_else(|| Error::from(AxiomViolation::new(Axiom::Bounded, &[])))?;
        let meets: Vec<usize> = meets.into_iter().map(Option::unwrap).collect();
        let joins: Vec<usize> = joins.into_iter().map(Option::unwrap).collect();
        for a in 0..n {
            if perp[perp[a]] != a {
                return Err(AxiomViolation::new(Axiom::Involution, &[a]).into());
            }
            if meets[a * n + perp[a]] != zero || joins[a * n + perp[a]] != one {
                return Err(AxiomViolation::new(Axiom::Complementation, &[a]).into());
            }
            for b in 0..n {
                if poset.leq(a, b) && !poset.leq(perp[b], perp[a]) {
                    return Err(AxiomViolation::new(Axiom::OrderReversing, &[a, b]).into());
                }
            }
        }
        Ok(Ortholattice {
            poset,
            zero,
            one,
            perp,
            meets,
            joins,
        })
    }

    /// Every ortholattice law with its first witness, evaluated independently.
    /// `perp` must already have the right length and range.
    pub fn laws(poset: &FinitePoset, perp: &[usize]) -> Vec<(Axiom, Option<AxiomViolation>)> {
        let n = poset.len();
        let (meets, joins) = poset.operation_tables();
        let lattice = (0..n * n)
            .find(|&i| meets[i].is_none() || joins[i].is_none())
            .map(|i| AxiomViolation::new(Axiom::Lattice, &[i / n, i % n]));
        let (bottom, top) = (poset.bottom(), poset.top());
        let bounded = match (bottom, top) {
            (Some(_), Some(_)) => None,
            _ => Some(AxiomViolation::new(Axiom::Bounded, &[])),
        };
        let involution = (0..n)
            .find(|&a| perp[perp[a]] != a)
            .map(|a| AxiomViolation::new(Axiom::Involution, &[a]));
        let complementation = (0..n)
            .find(|&a| {
                let m = meets[a * n + perp[a]];
                let j = joins[a * n + perp[a]];
                m.is_none() || m != bottom || j.is_none() || j != top
            })
            .map(|a| AxiomViolation::new(Axiom::Complementation, &[a]));
        let reversing = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| poset.leq(a, b) && !poset.leq(perp[b], perp[a]))
            .map(|(a, b)| AxiomViolation::new(Axiom::OrderReversing, &[a, b]));
        vec![
            (Axiom::Lattice, lattice),
            (Axiom::Bounded, bounded),
            (Axiom::Involution, involution),
            (Axiom::Complementation, complementation),
            (Axiom::OrderReversing, reversing),
        ]
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn perp(&self, a: usize) -> usize {
        self.perp[a]
    }

    pub fn perp_map(&self) -> &[usize] {
        &self.perp
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meets[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.joins[a * self.len() + b]
    }

    /// A pair `a ≤ b` with `b ≠ a ∨ (b ∧ a^⊥)`, if one exists.
    pub fn orthomodular_witness(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.leq(a, b) && self.join(a, self.meet(b, self.perp(a))) != b)
    }

    pub fn is_orthomodular(&self) -> bool {
        self.orthomodular_witness().is_none()
    }

    pub fn classify(&self) -> Classification {
        let mut c = self.poset.classify();
        c.is_oml = Some(self.is_orthomodular());
        c
    }

    /// All complements of `a`.
    pub fn complements(&self, a: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| self.meet(a, b) == self.zero && self.join(a, b) == self.one)
            .collect()
    }

    /// `b` is an upper bound of `Q` iff `b^⊥` is a lower bound of `Q^⊥`,
    /// checked for every `b` and every subset `Q` (subsets enumerated
    /// exhaustively up to 12 elements, singletons and pairs beyond that).
    pub fn involution_duality_holds(&self) -> bool {
        let n = self.len();
        let check = |q: &[usize]| {
            let qp: Vec<usize> = q.iter().map(|&x| self.perp(x)).collect();
            (0..n).all(|b| {
                let upper = q.iter().all(|&x| self.leq(x, b));
                let lower = qp.iter().all(|&x| self.leq(self.perp(b), x));
                upper == lower
            })
        };
        if n <= 12 {
            (0u32..1 << n).all(|mask| {
                let q: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                check(&q)
            })
        } else {
            (0..n).all(|a| (0..n).all(|b| check(&[a, b])))
        }
    }
}
