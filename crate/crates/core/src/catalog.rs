//! Standard small structures used as fixtures and test corpora.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::effect::{check_ea_axioms, EffectAlgebra, EffectTable};
use crate::poset::{FinitePoset, Ortholattice};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The `n`-element chain `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> FinitePoset {
    let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    FinitePoset::from_pairs(n, &pairs).expect("a chain is a poset")
}

/// Five elements: a bottom `0`, two minimal atoms `a, b`, and two maximal
/// elements `c, d` above both atoms. No top, and `a ∨ b` does not exist.
pub fn bowtie() -> FinitePoset {
    let pairs = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)];
    FinitePoset::from_pairs(5, &pairs)
        .and_then(|p| p.with_labels(labels(&["0", "a", "b", "c", "d"])))
        .expect("the bowtie is a poset")
}

fn subset_label(mask: usize, k: usize) -> String {
    let members: Vec<String> = (0..k)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// The Boolean algebra `2^k` of subsets of `{0, …, k-1}`, elements indexed
/// by bitmask.
pub fn boolean_algebra(k: usize) -> Ortholattice {
    assert!(k < 16, "boolean_algebra: k too large");
    let n = 1usize << k;
    let leq = (0..n * n).map(|i| (i / n) & !(i % n) == 0).collect();
    let poset = FinitePoset::from_relation(n, leq)
        .and_then(|p| p.with_labels((0..n).map(|m| subset_label(m, k)).collect()))
        .expect("subset inclusion is a partial order");
    let perp = (0..n).map(|m| !m & (n - 1)).collect();
    Ortholattice::new(poset, perp).expect("set complement is an orthocomplementation")
}

/// `MO2`: `0`, `a`, `a'`, `b`, `b'`, `1` with the four atoms pairwise
/// incomparable.
pub fn mo2() -> Ortholattice {
    let pairs = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 5),
        (2, 5),
        (3, 5),
        (4, 5),
    ];
    let poset = FinitePoset::from_pairs(6, &pairs)
        .and_then(|p| p.with_labels(labels(&["0", "a", "a'", "b", "b'", "1"])))
        .expect("MO2 is a poset");
    Ortholattice::new(poset, vec![5, 2, 1, 4, 3, 0]).expect("MO2 is an ortholattice")
}

/// The hexagon `O6`: `0 < x < y < 1` and `0 < y' < x' < 1`, orthocomplement
/// swapping primed and unprimed elements. An ortholattice that is not
/// orthomodular.
pub fn hexagon_o6() -> Ortholattice {
    // 0, x, y, y', x', 1
    let pairs = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)];
    let poset = FinitePoset::from_pairs(6, &pairs)
        .and_then(|p| p.with_labels(labels(&["0", "x", "y", "y'", "x'", "1"])))
        .expect("O6 is a poset");
    Ortholattice::new(poset, vec![5, 4, 3, 2, 1, 0]).expect("O6 is an ortholattice")
}

/// The Łukasiewicz chain `{0, 1/m, …, 1}` with `i/m ⊕ j/m = (i+j)/m` when
/// `i + j ≤ m`. `lukasiewicz_chain(2)` is the three-element chain with
/// `h ⊕ h = 1`.
pub fn lukasiewicz_chain(m: usize) -> EffectAlgebra {
    assert!(m >= 1);
    let n = m + 1;
    let names = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == m => "1".to_string(),
            i => format!("{i}/{m}"),
        })
        .collect();
    let mut t = EffectTable::empty(n, 0, m);
    t.labels = names;
    for i in 0..n {
        for j in 0..n {
            if i + j <= m {
                t.set(i, j, Some(i + j));
            }
        }
    }
    check_ea_axioms(&t).expect("Łukasiewicz chains are effect algebras")
}

/// The horizontal sum of two three-element chains: `{0, a, b, 1}` with
/// `a ⊕ a = b ⊕ b = 1` and `a ⊕ b` undefined. Its induced order is the
/// four-element diamond lattice; `a ∧ b = 0` yet `a ⊥ b` fails, so it is a
/// lattice effect algebra that is not MV.
pub fn diamond() -> EffectAlgebra {
    let mut t = EffectTable::empty(4, 0, 3);
    t.labels = labels(&["0", "a", "b", "1"]);
    for e in 0..4 {
        t.set(0, e, Some(e));
        t.set(e, 0, Some(e));
    }
    t.set(1, 1, Some(3));
    t.set(2, 2, Some(3));
    check_ea_axioms(&t).expect("the diamond is an effect algebra")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(boolean_algebra(3).len(), 8);
        assert_eq!(lukasiewicz_chain(2).len(), 3);
        assert_eq!(chain(4).covers(1), vec![2]);
        assert_eq!(diamond().induced_order().classify().is_lattice, true);
    }
}
