//! Finite effect algebras given by partial orthosum tables.
//!
//! A table entry is `None` when `e ⊕ f` is undefined. Validation is an
//! exhaustive O(n³) scan of the axioms plus the derived cancelation law.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Axiom, AxiomViolation, Error, Result};
use crate::poset::{FinitePoset, Ortholattice};

/// Default cap on the number of elements accepted by the validators.
pub const DEFAULT_MAX_ELEMENTS: usize = 128;

/// A candidate effect algebra: constants plus a partial orthosum table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectTable {
    pub labels: Vec<String>,
    pub zero: usize,
    pub one: usize,
    /// Row-major `n * n`; `osum[e * n + f]` is `e ⊕ f` when defined.
    pub osum: Vec<Option<usize>>,
}

impl EffectTable {
    /// All pairs undefined.
    pub fn empty(n: usize, zero: usize, one: usize) -> Self {
        EffectTable {
            labels: (0..n).map(|i| i.to_string()).collect(),
            zero,
            one,
            osum: vec![None; n * n],
        }
    }

    /// Table from `[e, f, e ⊕ f]` triples; unlisted pairs are undefined and
    /// listed pairs are taken literally (commutativity is not filled in).
    pub fn from_triples(
        labels: Vec<String>,
        zero: usize,
        one: usize,
        triples: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut t = EffectTable {
            labels,
            zero,
            one,
            osum: vec![None; n * n],
        };
        t.check_shape()?;
        for &(e, f, s) in triples {
            if e >= n || f >= n || s >= n {
                return Err(Error::Invalid(format!(
                    "triple ({e}, {f}, {s}) out of range"
                )));
            }
            match t.osum[e * n + f] {
                Some(prev) if prev != s => {
                    return Err(Error::Invalid(format!(
                        "conflicting entries for ({e}, {f}): {prev} and {s}"
                    )))
                }
                _ => t.osum[e * n + f] = Some(s),
            }
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn get(&self, e: usize, f: usize) -> Option<usize> {
        self.osum[e * self.len() + f]
    }

    pub fn set(&mut self, e: usize, f: usize, value: Option<usize>) {
        let n = self.len();
        self.osum[e * n + f] = value;
    }

    /// Defined entries as `(e, f, e ⊕ f)` in row-major order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.len();
        (0..n * n)
            .filter_map(|i| self.osum[i].map(|s| (i / n, i % n, s)))
            .collect()
    }

    /// Sizes and index ranges of the table.
    pub fn check_shape(&self) -> Result<()> {
        let n = self.len();
        if n == 0 {
            return Err(Error::Invalid("an effect algebra must be nonempty".into()));
        }
        if self.osum.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                found: self.osum.len(),
            });
        }
        if self.zero >= n || self.one >= n {
            return Err(Error::Invalid("zero or one out of range".into()));
        }
        if let Some(bad) = self.osum.iter().flatten().find(|&&s| s >= n) {
            return Err(Error::Invalid(format!("table entry {bad} out of range")));
        }
        Ok(())
    }

    /// The effect-algebra laws in the order they are scanned.
    pub const AXIOMS: [Axiom; 5] = [
        Axiom::EaCommutativity,
        Axiom::EaAssociativity,
        Axiom::EaOrthosupplementation,
        Axiom::EaZeroOne,
        Axiom::EaCancellation,
    ];

    /// The first violated axiom, scanning commutativity, associativity,
    /// orthosupplementation, the zero-one law and cancelation in that order.
    pub fn first_violation(&self) -> Option<AxiomViolation> {
        Self::AXIOMS.iter().find_map(|&a| self.violation_of(a))
    }

    /// First witness against one law, or `None` when it holds.
    pub fn violation_of(&self, axiom: Axiom) -> Option<AxiomViolation> {
        let n = self.len();
        let found = |w: &[usize]| Some(AxiomViolation::new(axiom, w));
        match axiom {
            Axiom::EaCommutativity => {
                for e in 0..n {
                    for f in 0..n {
                        if self.get(e, f) != self.get(f, e) {
                            return found(&[e, f]);
                        }
                    }
                }
            }
            Axiom::EaAssociativity => {
                for d in 0..n {
                    for e in 0..n {
                        for f in 0..n {
                            if !associativity_holds(self, d, e, f) {
                                return found(&[d, e, f]);
                            }
                        }
                    }
                }
            }
            Axiom::EaOrthosupplementation => {
                for e in 0..n {
                    let supplements: Vec<usize> = (0..n)
                        .filter(|&f| self.get(e, f) == Some(self.one))
                        .collect();
                    if supplements.len() != 1 {
                        let mut w = vec![e];
                        w.extend(supplements.iter().take(2));
                        return found(&w);
                    }
                }
            }
            Axiom::EaZeroOne => {
                for e in 0..n {
                    if e != self.zero && self.get(e, self.one).is_some() {
                        return found(&[e]);
                    }
                }
            }
            Axiom::EaCancellation => {
                for d in 0..n {
                    for e in 0..n {
                        let Some(ed) = self.get(e, d) else { continue };
                        for f in e + 1..n {
                            if self.get(f, d) == Some(ed) {
                                return found(&[e, f, d]);
                            }
                        }
                    }
                }
            }
            _ => {}
        }
        None
    }
}

fn associativity_holds(t: &EffectTable, d: usize, e: usize, f: usize) -> bool {
    let left = t.get(e, f).and_then(|ef| t.get(d, ef));
    let right = t.get(d, e).and_then(|de| t.get(de, f));
    left == right
}

impl AxiomViolation {
    /// Re-checks, directly at the witness, that the named axiom fails for
    /// `table`. Independent of the scan that produced the witness.
    pub fn confirmed_by(&self, table: &EffectTable) -> bool {
        let w = &self.witness;
        let n = table.len();
        match (self.axiom, w.as_slice()) {
            (Axiom::EaCommutativity, &[e, f]) => table.get(e, f) != table.get(f, e),
            (Axiom::EaAssociativity, &[d, e, f]) => !associativity_holds(table, d, e, f),
            (Axiom::EaOrthosupplementation, [e, ..]) => {
                (0..n)
                    .filter(|&f| table.get(*e, f) == Some(table.one))
                    .count()
                    != 1
            }
            (Axiom::EaZeroOne, &[e]) => e != table.zero && table.get(e, table.one).is_some(),
            (Axiom::EaCancellation, &[e, f, d]) => {
                e != f && table.get(e, d).is_some() && table.get(e, d) == table.get(f, d)
            }
            _ => false,
        }
    }
}

/// Validates `table` (with the default element cap).
pub fn check_ea_axioms(table: &EffectTable) -> Result<EffectAlgebra> {
    check_ea_axioms_with_limit(table, DEFAULT_MAX_ELEMENTS)
}

pub fn check_ea_axioms_with_limit(
    table: &EffectTable,
    max_elements: usize,
) -> Result<EffectAlgebra> {
    if table.len() > max_elements {
        return Err(Error::TooLarge(table.len(), max_elements));
    }
    table.check_shape()?;
    if let Some(v) = table.first_violation() {
        return Err(v.into());
    }
    let n = table.len();
    let perp = (0..n)
        .map(|e| {
            (0..n)
                .find(|&f| table.get(e, f) == Some(table.one))
                .unwrap()
        })
        .collect();
    Ok(EffectAlgebra {
        table: table.clone(),
        perp,
    })
}

/// A validated finite effect algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectAlgebra {
    table: EffectTable,
    perp: Vec<usize>,
}

/// Result of [`check_morphism`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub is_morphism: bool,
    pub is_isomorphism: bool,
}

impl EffectAlgebra {
    pub fn table(&self) -> &EffectTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.table.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.table.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.table.zero
    }

    pub fn one(&self) -> usize {
        self.table.one
    }

    pub fn perp(&self, e: usize) -> usize {
        self.perp[e]
    }

    #[inline]
    pub fn osum(&self, e: usize, f: usize) -> Option<usize> {
        self.table.get(e, f)
    }

    pub fn orthogonal(&self, e: usize, f: usize) -> bool {
        self.osum(e, f).is_some()
    }

    /// `e ≤ f` iff `e ⊕ d = f` for some `d`.
    pub fn leq(&self, e: usize, f: usize) -> bool {
        (0..self.len()).any(|d| self.osum(e, d) == Some(f))
    }

    pub fn induced_order(&self) -> FinitePoset {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for e in 0..n {
            for d in 0..n {
                if let Some(f) = self.osum(e, d) {
                    leq[e * n + f] = true;
                }
            }
        }
        FinitePoset::from_relation(n, leq)
            .and_then(|p| p.with_labels(self.table.labels.clone()))
            .expect("the induced relation of a validated effect algebra is a partial order")
    }

    /// Checks the order laws every effect algebra satisfies: `0 ≤ e ≤ 1`,
    /// `e ≤ f ⇔ f^⊥ ≤ e^⊥`, `e ⊥ f ⇔ e ≤ f^⊥` and
    /// `e ≤ f ⇒ f = e ⊕ (e ⊕ f^⊥)^⊥`. Returns the first failing pair.
    pub fn induced_order_violation(&self) -> Option<(usize, usize)> {
        let p = self.induced_order();
        let n = self.len();
        for e in 0..n {
            if !p.leq(self.zero(), e) || !p.leq(e, self.one()) {
                return Some((e, e));
            }
            for f in 0..n {
                if p.leq(e, f) != p.leq(self.perp(f), self.perp(e)) {
                    return Some((e, f));
                }
                if self.orthogonal(e, f) != p.leq(e, self.perp(f)) {
                    return Some((e, f));
                }
                if p.leq(e, f) {
                    let back = self
                        .osum(e, self.perp(f))
                        .map(|x| self.perp(x))
                        .and_then(|y| self.osum(e, y));
                    if back != Some(f) {
                        return Some((e, f));
                    }
                }
            }
        }
        None
    }

    /// Iterated orthosum `((e₁ ⊕ e₂) ⊕ …)`; `None` when some prefix is
    /// undefined. The empty family sums to `0`.
    pub fn orthosum_family(&self, family: &[usize]) -> Option<usize> {
        family
            .iter()
            .try_fold(self.zero(), |acc, &e| self.osum(acc, e))
    }

    /// Sub-effect algebra test: contains `0`, closed under `^⊥` and under
    /// defined orthosums.
    pub fn is_sub_effect_algebra(&self, subset: &[usize]) -> bool {
        let n = self.len();
        let mut member = vec![false; n];
        for &f in subset {
            if f >= n {
                return false;
            }
            member[f] = true;
        }
        if !member[self.zero()] {
            return false;
        }
        subset.iter().all(|&f| member[self.perp(f)])
            && subset.iter().all(|&a| {
                subset
                    .iter()
                    .all(|&b| self.osum(a, b).map_or(true, |s| member[s]))
            })
    }

    /// Lattice ordered, and every disjoint pair is orthogonal.
    pub fn is_mv_effect_algebra(&self) -> bool {
        let p = self.induced_order();
        if !p.classify().is_lattice {
            return false;
        }
        let n = self.len();
        (0..n).all(|e| (0..n).all(|f| p.meet(e, f) != Some(self.zero()) || self.orthogonal(e, f)))
    }

    /// Componentwise product `E × F`, labels `(e,f)`.
    pub fn product(&self, other: &EffectAlgebra) -> EffectAlgebra {
        let (n, m) = (self.len(), other.len());
        let idx = |a: usize, b: usize| a * m + b;
        let labels = (0..n * m)
            .map(|i| format!("({},{})", self.labels()[i / m], other.labels()[i % m]))
            .collect();
        let mut table = EffectTable {
            labels,
            zero: idx(self.zero(), other.zero()),
            one: idx(self.one(), other.one()),
            osum: vec![None; n * m * n * m],
        };
        for a in 0..n * m {
            for b in 0..n * m {
                let s = self
                    .osum(a / m, b / m)
                    .zip(other.osum(a % m, b % m))
                    .map(|(x, y)| idx(x, y));
                table.set(a, b, s);
            }
        }
        check_ea_axioms_with_limit(&table, usize::MAX)
            .expect("a product of effect algebras is an effect algebra")
    }
}

/// Checks whether `phi` (indices into `target`) is an effect-algebra
/// morphism `source → target`, and whether it is an isomorphism.
pub fn check_morphism(
    source: &EffectAlgebra,
    target: &EffectAlgebra,
    phi: &[usize],
) -> MorphismReport {
    let is_morphism = is_morphism(source, target, phi);
    let is_isomorphism = is_morphism && source.len() == target.len() && {
        let mut inverse = vec![usize::MAX; target.len()];
        let mut bijective = true;
        for (e, &fe) in phi.iter().enumerate() {
            if inverse[fe] != usize::MAX {
                bijective = false;
                break;
            }
            inverse[fe] = e;
        }
        bijective && is_morphism_fn(target, source, &inverse)
    };
    MorphismReport {
        is_morphism,
        is_isomorphism,
    }
}

fn is_morphism(source: &EffectAlgebra, target: &EffectAlgebra, phi: &[usize]) -> bool {
    phi.len() == source.len()
        && phi.iter().all(|&x| x < target.len())
        && is_morphism_fn(source, target, phi)
}

fn is_morphism_fn(source: &EffectAlgebra, target: &EffectAlgebra, phi: &[usize]) -> bool {
    let n = source.len();
    phi[source.one()] == target.one()
        && (0..n).all(|e| {
            (0..n).all(|f| match source.osum(e, f) {
                None => true,
                Some(s) => target.osum(phi[e], phi[f]) == Some(phi[s]),
            })
        })
}

/// The effect algebra of an orthomodular lattice: `p ⊕ q := p ∨ q` when
/// `p ≤ q^⊥`.
pub fn oml_to_ea(lattice: &Ortholattice) -> Result<EffectAlgebra> {
    if !lattice.is_orthomodular() {
        return Err(Error::NotOml);
    }
    let n = lattice.len();
    let mut table = EffectTable {
        labels: lattice.poset().labels().to_vec(),
        zero: lattice.zero(),
        one: lattice.one(),
        osum: vec![None; n * n],
    };
    for p in 0..n {
        for q in 0..n {
            if lattice.leq(p, lattice.perp(q)) {
                table.set(p, q, Some(lattice.join(p, q)));
            }
        }
    }
    check_ea_axioms_with_limit(&table, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn three_chain() -> EffectAlgebra {
        catalog::lukasiewicz_chain(2)
    }

    #[test]
    fn three_chain_is_valid() {
        let e = three_chain();
        let h = e.index_of("1/2").unwrap();
        assert_eq!(e.osum(h, h), Some(e.one()));
        assert_eq!(e.perp(h), h);
        assert!(e.induced_order_violation().is_none());
    }

    #[test]
    fn broken_half_has_no_orthosupplement() {
        let mut t = three_chain().table().clone();
        t.set(1, 1, Some(1));
        let err = check_ea_axioms(&t).unwrap_err();
        let Error::Axiom(v) = err else {
            panic!("expected an axiom violation")
        };
        assert!(matches!(
            v.axiom,
            Axiom::EaOrthosupplementation | Axiom::EaZeroOne
        ));
        assert!(v.confirmed_by(&t));
    }

    #[test]
    fn induced_order_on_three_chain_is_total() {
        let p = three_chain().induced_order();
        assert!(p.lt(0, 1) && p.lt(1, 2) && p.lt(0, 2));
    }

    #[test]
    fn zero_is_least() {
        let e = oml_to_ea(&catalog::mo2()).unwrap();
        let p = e.induced_order();
        for x in 0..e.len() {
            assert!(p.leq(e.zero(), x));
        }
    }

    #[test]
    fn oml_conversion() {
        let b = catalog::boolean_algebra(2);
        let e = oml_to_ea(&b).unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(e.induced_order(), b.poset().clone());

        let mo2 = catalog::mo2();
        let e = oml_to_ea(&mo2).unwrap();
        assert_eq!(e.len(), 6);
        assert_eq!(e.induced_order().relation(), mo2.poset().relation());
        // orthogonal elements are disjoint
        for p in 0..6 {
            for q in 0..6 {
                if e.orthogonal(p, q) {
                    assert_eq!(mo2.meet(p, q), mo2.zero());
                }
            }
        }

        let two = oml_to_ea(&catalog::boolean_algebra(1)).unwrap();
        assert_eq!(two.len(), 2);

        assert_eq!(oml_to_ea(&catalog::hexagon_o6()), Err(Error::NotOml));
    }

    #[test]
    fn orthosum_families() {
        let e = three_chain();
        let h = 1;
        assert_eq!(e.orthosum_family(&[h, h]), Some(e.one()));
        assert_eq!(e.orthosum_family(&[h, h, h]), None);
        assert_eq!(e.orthosum_family(&[]), Some(e.zero()));
    }

    #[test]
    fn sub_effect_algebras() {
        let e = three_chain();
        assert!(e.is_sub_effect_algebra(&[0, 2]));
        assert!(!e.is_sub_effect_algebra(&[0, 1]));
        assert!(e.is_sub_effect_algebra(&[0, 1, 2]));
    }

    #[test]
    fn morphisms() {
        let e = three_chain();
        let id: Vec<usize> = (0..3).collect();
        assert_eq!(
            check_morphism(&e, &e, &id),
            MorphismReport {
                is_morphism: true,
                is_isomorphism: true
            }
        );
        let constant_one = vec![e.one(); 3];
        assert!(!check_morphism(&e, &e, &constant_one).is_morphism);

        let b = oml_to_ea(&catalog::boolean_algebra(2)).unwrap();
        let into_product = b.product(&b);
        assert_eq!(into_product.len(), 16);
    }

    #[test]
    fn mv_effect_algebras() {
        assert!(three_chain().is_mv_effect_algebra());
        assert!(oml_to_ea(&catalog::boolean_algebra(3))
            .unwrap()
            .is_mv_effect_algebra());
        // MO2: a ∧ b = 0 but a ⊕ b is undefined
        assert!(!oml_to_ea(&catalog::mo2()).unwrap().is_mv_effect_algebra());
        assert!(!catalog::diamond().is_mv_effect_algebra());
    }
}
