//! Curated finite models and seeded single-entry mutations of their tables.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use synaptica_core::effect::oml_to_ea;
use synaptica_core::{catalog, EffectAlgebra, EffectTable};

/// The curated valid effect algebras: the 3-chain, `2^k` for `k ≤ 4`, and
/// the effect algebra of `MO2`.
pub fn curated_effect_algebras() -> Vec<(String, EffectAlgebra)> {
    let mut out = vec![("chain3".to_string(), catalog::lukasiewicz_chain(2))];
    for k in 1..=4 {
        out.push((
            format!("boolean{k}"),
            oml_to_ea(&catalog::boolean_algebra(k)).expect("Boolean EA"),
        ));
    }
    out.push((
        "mo2".to_string(),
        oml_to_ea(&catalog::mo2()).expect("MO2 EA"),
    ));
    out
}

/// One changed cell of an orthosum table.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub cell: (usize, usize),
    pub before: Option<usize>,
    pub after: Option<usize>,
    pub table: EffectTable,
}

/// Effect-algebra axioms read straight off a sparse partial operation:
/// commutativity, associativity, a unique orthosupplement and the zero-one
/// law. Used to decide whether a mutation really breaks the structure.
pub fn reference_is_effect_algebra(t: &EffectTable) -> bool {
    let n = t.len();
    let op: HashMap<(usize, usize), usize> = t
        .triples()
        .into_iter()
        .map(|(e, f, s)| ((e, f), s))
        .collect();
    let sum = |e: usize, f: usize| op.get(&(e, f)).copied();
    for (&(e, f), &s) in &op {
        if sum(f, e) != Some(s) {
            return false;
        }
    }
    for (&(f, g), &fg) in &op {
        for e in 0..n {
            if let Some(left) = sum(e, fg) {
                match sum(e, f).and_then(|ef| sum(ef, g)) {
                    Some(right) if right == left => {}
                    _ => return false,
                }
            }
        }
    }
    for e in 0..n {
        if (0..n).filter(|&f| sum(e, f) == Some(t.one)).count() != 1 {
            return false;
        }
        if e != t.zero && sum(e, t.one).is_some() {
            return false;
        }
    }
    true
}

/// A seeded sample of breaking single-cell mutations.
#[derive(Clone, Debug)]
pub struct MutationSample {
    pub mutations: Vec<Mutation>,
    /// Candidates skipped because they are still effect algebras.
    pub still_valid: usize,
    /// Every single-cell change was examined (the table has fewer than
    /// `count` breaking mutations).
    pub exhausted: bool,
}

/// Up to `count` distinct single-cell mutations of `table` that are not
/// effect algebras, in an order drawn from `rng`. Candidates that happen to
/// give another effect algebra are skipped and counted.
pub fn mutations<R: Rng + ?Sized>(
    table: &EffectTable,
    count: usize,
    rng: &mut R,
) -> MutationSample {
    let n = table.len();
    let mut candidates: Vec<((usize, usize), Option<usize>)> = Vec::new();
    for e in 0..n {
        for f in 0..n {
            let before = table.get(e, f);
            for value in (0..n).map(Some).chain([None]) {
                if value != before {
                    candidates.push(((e, f), value));
                }
            }
        }
    }
    candidates.shuffle(rng);
    let mut out = Vec::with_capacity(count);
    let mut still_valid = 0;
    let mut examined = 0;
    for ((e, f), after) in candidates.iter().copied() {
        if out.len() == count {
            break;
        }
        examined += 1;
        let mut t = table.clone();
        t.set(e, f, after);
        if reference_is_effect_algebra(&t) {
            still_valid += 1;
            continue;
        }
        out.push(Mutation {
            cell: (e, f),
            before: table.get(e, f),
            after,
            table: t,
        });
    }
    MutationSample {
        mutations: out,
        still_valid,
        exhausted: examined == candidates.len(),
    }
}
