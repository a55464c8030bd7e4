//! Seeded verification suites behind `synaptica verify`.
//!
//! Every suite draws from its own ChaCha8 stream of the run seed, so a suite
//! gives the same report alone or as part of `all`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use synaptica_core::effect::{check_ea_axioms, oml_to_ea};
use synaptica_core::mv::{ea_to_mv, mv_to_ea};
use synaptica_core::order_unit::{
    self, extend_effect_morphism, norm_by_bisection, positive_decomposition, FunctionSpace,
    OrderUnitSpace, SymSpace,
};
use synaptica_core::polytope;
use synaptica_core::sample;
use synaptica_core::state::{self, extremal_commutative_characterization, simplex_system};
use synaptica_core::stone::{check_rickart, functional_representation, stone_space};
use synaptica_core::synaptic::{
    self, double_commutant, formula_step, orthomodular_residual, proj_join, proj_leq,
    stieltjes_reconstruct, Decomposition, SpectralResolution,
};
use synaptica_core::{
    catalog, tol, Axiom, Error, FnElement, Ortholattice, SymMatrix, SynapticElement,
};

use crate::corpus;

pub const SUITES: [&str; 6] = [
    "posets",
    "effect",
    "order-unit",
    "synaptic",
    "states",
    "stone",
];

/// Replaceable pieces of the implementation, so that the suites can be
/// shown to catch a broken one.
#[derive(Clone, Copy)]
pub struct Hooks {
    pub decompose: fn(&SymMatrix) -> Decomposition<SymMatrix>,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks {
            decompose: synaptic::decompose::<SymMatrix>,
        }
    }
}

#[derive(Clone, Copy)]
pub struct Config {
    pub seed: u64,
    pub report_tol: f64,
    pub hooks: Hooks,
}

impl Config {
    pub fn new(seed: u64) -> Self {
        Config {
            seed,
            report_tol: tol::REPORT,
            hooks: Hooks::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub worst_residual: Option<f64>,
    pub threshold: Option<f64>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("verify reports serialize")
    }

    /// A fixed-width table, one line per check.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<11} {:<60} {:>6} {:>7} {:>12}\n",
            "suite", "check", "status", "cases", "residual"
        );
        for s in &self.suites {
            for c in &s.checks {
                let residual = c
                    .worst_residual
                    .map_or("-".to_string(), |r| format!("{r:.3e}"));
                out.push_str(&format!(
                    "{:<11} {:<60} {:>6} {:>7} {:>12}\n",
                    s.suite,
                    c.name,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.cases,
                    residual
                ));
                if let (false, Some(w)) = (c.passed, &c.witness) {
                    out.push_str(&format!("{:<11} {:<60} witness: {w}\n", "", ""));
                }
            }
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// Largest residual over a run of cases, with the case that produced it.
struct Worst {
    name: &'static str,
    threshold: f64,
    cases: usize,
    worst: f64,
    at: Option<String>,
    error: Option<String>,
}

impl Worst {
    fn new(name: &'static str, threshold: f64) -> Self {
        Worst {
            name,
            threshold,
            cases: 0,
            worst: 0.0,
            at: None,
            error: None,
        }
    }

    fn see(&mut self, residual: f64, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !(residual <= self.worst) {
            self.worst = residual;
            self.at = Some(case());
        }
    }

    fn fail(&mut self, message: String) {
        self.cases += 1;
        self.error.get_or_insert(message);
    }

    fn finish(self) -> CheckResult {
        let passed = self.error.is_none() && self.worst <= self.threshold;
        CheckResult {
            name: self.name.to_string(),
            passed,
            cases: self.cases,
            worst_residual: Some(self.worst),
            threshold: Some(self.threshold),
            witness: if passed { None } else { self.error.or(self.at) },
        }
    }
}

/// Pass/fail over a run of cases, keeping the first failing case.
struct All {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl All {
    fn new(name: &'static str) -> Self {
        All {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn see(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(case());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            passed: self.failure.is_none(),
            cases: self.cases,
            worst_residual: None,
            threshold: None,
            witness: self.failure,
        }
    }
}

fn suite_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    rng
}

/// Runs one named suite, or every suite for `"all"`.
pub fn run(suite: &str, config: &Config) -> Result<VerifyReport, String> {
    let names: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        s => {
            return Err(format!(
                "unknown suite {s:?}; expected one of {} or all",
                SUITES.join(", ")
            ))
        }
    };
    let suites: Vec<SuiteReport> = names.into_iter().map(|s| run_suite(s, config)).collect();
    Ok(VerifyReport {
        command: "verify",
        seed: config.seed,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

fn run_suite(name: &str, config: &Config) -> SuiteReport {
    let index = SUITES.iter().position(|&s| s == name).expect("known suite");
    let mut rng = suite_rng(config.seed, index);
    let checks = match name {
        "posets" => posets(&mut rng, config),
        "effect" => effect(&mut rng),
        "order-unit" => order_unit_suite(&mut rng, config),
        "synaptic" => synaptic_suite(&mut rng, config),
        "states" => states(&mut rng, config),
        _ => stone(&mut rng, config),
    };
    SuiteReport {
        suite: name.to_string(),
        seed: config.seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn random_size(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    rng.random_range(lo..=hi)
}

/// A random symmetric matrix whose spectrum has repeated values about half
/// the time.
pub fn random_element(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
    if rng.random_bool(0.5) {
        sample::random_symmetric(rng, n, 1.0)
    } else {
        let distinct: Vec<f64> = (0..n.div_ceil(2)).map(|_| sample::gaussian(rng)).collect();
        let values: Vec<f64> = (0..n).map(|i| distinct[i % distinct.len()]).collect();
        sample::random_with_spectrum(rng, &values)
    }
}

fn posets(rng: &mut ChaCha8Rng, config: &Config) -> Vec<CheckResult> {
    let mut classify = All::new("catalog classification");
    let chain = catalog::chain(3).classify();
    classify.see(
        chain.is_lattice && chain.is_distributive && !chain.is_complemented,
        || "chain(3)".into(),
    );
    classify.see(!catalog::bowtie().classify().is_lattice, || "bowtie".into());
    for k in 1..=4 {
        let c = catalog::boolean_algebra(k).classify();
        classify.see(c.is_boolean && c.is_oml == Some(true), || format!("2^{k}"));
    }
    let mo2 = catalog::mo2().classify();
    classify.see(mo2.is_oml == Some(true) && !mo2.is_distributive, || {
        "MO2".into()
    });
    let o6 = catalog::hexagon_o6().classify();
    classify.see(o6.is_oml == Some(false), || "O6".into());

    let lattices: Vec<(String, Ortholattice)> = (1..=4)
        .map(|k| (format!("2^{k}"), catalog::boolean_algebra(k)))
        .chain([
            ("MO2".to_string(), catalog::mo2()),
            ("O6".to_string(), catalog::hexagon_o6()),
        ])
        .collect();
    let mut laws = All::new("ortholattice laws");
    let mut duality = All::new("orthocomplement duality on bounds");
    for (name, l) in &lattices {
        let bad = Ortholattice::laws(l.poset(), l.perp_map())
            .into_iter()
            .find(|(_, v)| v.is_some());
        laws.see(bad.is_none(), || {
            format!("{name}: {}", bad.map(|(a, _)| a.name()).unwrap_or_default())
        });
        duality.see(l.involution_duality_holds(), || name.clone());
    }

    let mut om = Worst::new(
        "orthomodular identity for projections in Sym(4)",
        config.report_tol,
    );
    for k in 0..1000 {
        let (rp, rr) = (rng.random_range(0..=4), rng.random_range(0..=4));
        let p = sample::random_projection(rng, 4, rp);
        let r = sample::random_projection(rng, 4, rr);
        let q = match proj_join(&p, &r) {
            Ok(q) => q,
            Err(e) => {
                om.fail(format!("pair {k}: {e}"));
                continue;
            }
        };
        match (orthomodular_residual(&p, &q), proj_leq(&p, &q)) {
            (Ok(res), Ok(true)) => {
                let gap = synaptic::spectrum(&q.sub(&p))
                    .first()
                    .copied()
                    .unwrap_or(0.0);
                om.see(res.max(-gap), || format!("pair {k}"));
            }
            (Err(e), _) => om.fail(format!("pair {k}: {e}")),
            (_, _) => om.fail(format!("pair {k}: p is not below p v r")),
        }
    }
    vec![
        classify.finish(),
        laws.finish(),
        duality.finish(),
        om.finish(),
    ]
}

fn effect(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let models = corpus::curated_effect_algebras();
    let mut valid = All::new("curated models satisfy the axioms");
    let mut mutated = All::new("single-entry mutations fail with a witness");
    for (name, ea) in &models {
        valid.see(check_ea_axioms(ea.table()).is_ok(), || name.clone());
        let sample = corpus::mutations(ea.table(), 20, rng);
        if sample.mutations.len() < 20 && !sample.exhausted {
            mutated.see(false, || {
                format!("{name}: only {} breaking mutations", sample.mutations.len())
            });
        }
        for m in sample.mutations {
            let caught = check_ea_axioms(&m.table);
            let ok = matches!(&caught, Err(Error::Axiom(v)) if v.confirmed_by(&m.table));
            mutated.see(ok, || {
                format!("{name}: cell {:?} {:?} -> {:?}", m.cell, m.before, m.after)
            });
        }
    }

    let mut mv = All::new("MV round trip on MV-effect algebras");
    let mut luk = All::new("mv(7) holds exhaustively");
    let mv_models: Vec<(String, synaptica_core::EffectAlgebra)> = (1..=6)
        .map(|m| (format!("L{m}"), catalog::lukasiewicz_chain(m)))
        .chain((1..=4).map(|k| {
            (
                format!("2^{k}"),
                oml_to_ea(&catalog::boolean_algebra(k)).expect("Boolean EA"),
            )
        }))
        .collect();
    for (name, ea) in &mv_models {
        let round = ea_to_mv(ea).and_then(|m| mv_to_ea(&m).map(|back| (m, back)));
        match round {
            Ok((m, back)) => {
                mv.see(back.table() == ea.table(), || name.clone());
                let again = mv_to_ea(&m).and_then(|e| ea_to_mv(&e));
                mv.see(again.as_ref() == Ok(&m), || format!("{name} (MV side)"));
                luk.see(
                    m.table().violation_of(Axiom::MvLukasiewicz).is_none(),
                    || name.clone(),
                );
            }
            Err(e) => mv.see(false, || format!("{name}: {e}")),
        }
    }
    let mut non_mv = All::new("non-MV effect algebras are rejected");
    let mo2 = oml_to_ea(&catalog::mo2()).expect("MO2 EA");
    non_mv.see(
        matches!(ea_to_mv(&mo2), Err(Error::NotMvEffectAlgebra)),
        || "MO2".into(),
    );
    non_mv.see(
        matches!(
            ea_to_mv(&catalog::diamond()),
            Err(Error::NotMvEffectAlgebra)
        ),
        || "diamond".into(),
    );

    let mut products = All::new("products of effect algebras");
    let parts = [catalog::lukasiewicz_chain(2), catalog::diamond(), mo2];
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate() {
            products.see(check_ea_axioms(a.product(b).table()).is_ok(), || {
                format!("{i} x {j}")
            });
        }
    }
    vec![
        valid.finish(),
        mutated.finish(),
        mv.finish(),
        luk.finish(),
        non_mv.finish(),
        products.finish(),
    ]
}

fn order_unit_suite(rng: &mut ChaCha8Rng, config: &Config) -> Vec<CheckResult> {
    let mut sandwich = Worst::new("-|a|v <= a <= |a|v", config.report_tol);
    let mut bisection = Worst::new("norm by bisection", 1e-8);
    let mut split = Worst::new("a = b - c with b, c positive", config.report_tol);
    for k in 0..100 {
        let n = random_size(rng, 1, 6);
        let a = random_element(rng, n);
        let norm = a.norm();
        let s = synaptic::spectrum(&a);
        let (lo, hi) = (s[0], s[s.len() - 1]);
        sandwich.see(
            ((-norm - lo).max(hi - norm)).max(0.0) / tol::scale(norm),
            || format!("sym {k}"),
        );
        let space = SymSpace { n };
        bisection.see((norm_by_bisection(&space, &a, 60) - norm).abs(), || {
            format!("sym {k}")
        });
        let (b, c) = positive_decomposition(&space, &a);
        let cone = synaptic::spectrum(&b)[0]
            .min(synaptic::spectrum(&c)[0])
            .min(0.0);
        split.see(b.sub(&c).dist(&a).max(-cone), || format!("sym {k}"));

        let f = sample::random_function(rng, n, 1.0);
        let space = FunctionSpace { points: n };
        let fl = f.values().iter().fold(f64::INFINITY, |m, &x| m.min(x));
        let fh = f.values().iter().fold(f64::NEG_INFINITY, |m, &x| m.max(x));
        sandwich.see(((-f.norm() - fl).max(fh - f.norm())).max(0.0), || {
            format!("fn {k}")
        });
        bisection.see((norm_by_bisection(&space, &f, 60) - f.norm()).abs(), || {
            format!("fn {k}")
        });
        let (b, c) = positive_decomposition(&space, &f);
        split.see(
            b.sub(&c)
                .dist(&f)
                .max(if space.in_cone(&b) && space.in_cone(&c) {
                    0.0
                } else {
                    1.0
                }),
            || format!("fn {k}"),
        );
    }

    let mut linear = Worst::new(
        "extension of an effect morphism is linear",
        config.report_tol,
    );
    let mut restrict = Worst::new("extension restricts to the morphism", config.report_tol);
    for k in 0..10 {
        let n = random_size(rng, 2, 4);
        let u = sample::random_orthogonal(rng, n);
        let space = SymSpace { n };
        let omega = |e: &SymMatrix| e.conjugate(&u);
        let ext = match extend_effect_morphism(omega, &space, &space, rng, 10) {
            Ok(x) => x,
            Err(e) => {
                linear.fail(format!("map {k}: {e}"));
                continue;
            }
        };
        for j in 0..10 {
            let a = order_unit::random_vector(&space, rng);
            let b = order_unit::random_vector(&space, rng);
            let (s, t) = (sample::gaussian(rng), sample::gaussian(rng));
            let lhs = ext.apply(&space.combine(s, &a, t, &b));
            let rhs = space.combine(s, &ext.apply(&a), t, &ext.apply(&b));
            let size = s.abs() * a.norm() + t.abs() * b.norm();
            linear.see(lhs.dist(&rhs) / tol::scale(size), || {
                format!("map {k}, combination {j}")
            });
            let e = order_unit::random_effect(&space, rng);
            restrict.see(ext.apply(&e).dist(&omega(&e)), || {
                format!("map {k}, effect {j}")
            });
        }
    }
    vec![
        sandwich.finish(),
        bisection.finish(),
        split.finish(),
        linear.finish(),
        restrict.finish(),
    ]
}

fn carrier_pair(rng: &mut ChaCha8Rng, n: usize) -> (SymMatrix, SymMatrix, bool) {
    let q = sample::random_orthogonal(rng, n);
    let mask_a: u32 = rng.random_range(0..1 << n);
    let mask_b: u32 = if rng.random_bool(0.5) {
        rng.random_range(0..1 << n) & !mask_a
    } else {
        rng.random_range(0..1 << n)
    };
    let diag = |mask: u32, rng: &mut ChaCha8Rng| -> Vec<f64> {
        (0..n)
            .map(|i| {
                if mask & (1 << i) == 0 {
                    0.0
                } else {
                    let x: f64 = rng.random_range(0.1..2.0);
                    if rng.random_bool(0.5) {
                        x
                    } else {
                        -x
                    }
                }
            })
            .collect()
    };
    let a = SymMatrix::from_diagonal(&diag(mask_a, rng)).conjugate(&q);
    let b = SymMatrix::from_diagonal(&diag(mask_b, rng)).conjugate(&q);
    (a, b, mask_a & mask_b == 0)
}

fn synaptic_suite(rng: &mut ChaCha8Rng, config: &Config) -> Vec<CheckResult> {
    let t = config.report_tol;
    let mut recon = Worst::new("sum of lambda_i p_i = a", t);
    let mut resolution = Worst::new("eigenprojections resolve the identity", t);
    let mut formula = Worst::new("p(a, l) = 1 - ((a - l)+) carrier", t);
    let mut stieltjes = Worst::new("stieltjes sums with mesh 1e-3", 1e-3);
    let mut identity = Worst::new("a = a+ - a-", t);
    let mut abs_sum = Worst::new("|a| = a+ + a-", t);
    let mut orth = Worst::new("a+ a- = 0", t);
    let mut parts_pos = Worst::new("a+ and a- are positive", t);
    let mut root = Worst::new("sqrt(a^2) = |a|", t);
    let mut jordan = Worst::new("(a^2 . b) . a = a^2 . (b . a)", t);
    for k in 0..60 {
        let n = random_size(rng, 1, 8);
        let a = random_element(rng, n);
        let scale = tol::scale(a.norm());
        let res = SpectralResolution::new(&a);
        recon.see(res.reconstruct().dist(&a) / scale, || {
            format!("element {k}")
        });
        resolution.see(res.resolution_residual(), || format!("element {k}"));
        for l in res.eigenvalues().iter().copied().chain(res.midpoints()) {
            formula.see(formula_step(&a, l).dist(&res.step(l)), || {
                format!("element {k} at {l}")
            });
        }
        match stieltjes_reconstruct(&a, 1e-3) {
            Ok(s) => stieltjes.see(s.dist(&a), || format!("element {k}")),
            Err(e) => stieltjes.fail(format!("element {k}: {e}")),
        }
        let d = (config.hooks.decompose)(&a);
        identity.see(d.pos.sub(&d.neg).dist(&a) / scale, || {
            format!("element {k}")
        });
        abs_sum.see(d.pos.add(&d.neg).dist(&d.abs) / scale, || {
            format!("element {k}")
        });
        orth.see(d.pos.product_size(&d.neg) / (scale * scale), || {
            format!("element {k}")
        });
        let low = synaptic::spectrum(&d.pos)[0].min(synaptic::spectrum(&d.neg)[0]);
        parts_pos.see((-low).max(0.0) / scale, || format!("element {k}"));
        match synaptic::sqrt(&synaptic::square(&a)) {
            Ok(r) => root.see(r.dist(&synaptic::abs(&a)) / scale, || {
                format!("element {k}")
            }),
            Err(e) => root.fail(format!("element {k}: {e}")),
        }
        let b = random_element(rng, n);
        let a2 = synaptic::square(&a);
        let lhs = a2.jordan_unchecked(&b).jordan_unchecked(&a);
        let rhs = a2.jordan_unchecked(&b.jordan_unchecked(&a));
        jordan.see(
            lhs.dist(&rhs) / (scale.powi(3) * tol::scale(b.norm())),
            || format!("element {k}"),
        );
    }

    let mut carrier = All::new("ab = 0 iff carrier(a) b = 0 iff carrier(b) carrier(a) = 0");
    for k in 0..200 {
        let n = random_size(rng, 1, 6);
        let (a, b, disjoint) = carrier_pair(rng, n);
        let (ca, cb) = (synaptic::carrier(&a), synaptic::carrier(&b));
        let verdicts = [
            synaptic::product_is_zero(&a, &b),
            synaptic::product_is_zero(&ca, &b),
            synaptic::product_is_zero(&cb, &ca),
        ];
        carrier.see(verdicts.iter().all(|&v| v == disjoint), || {
            format!("pair {k}: {verdicts:?}, expected {disjoint}")
        });
    }

    let mut dc = All::new("a set lies in its double commutant");
    for k in 0..10 {
        let n = random_size(rng, 2, 4);
        let q = sample::random_orthogonal(rng, n);
        let set: Vec<SymMatrix> = (0..2)
            .map(|_| {
                let d: Vec<f64> = (0..n).map(|_| rng.random_range(0..3) as f64).collect();
                SymMatrix::from_diagonal(&d).conjugate(&q)
            })
            .collect();
        match double_commutant(&SymMatrix::identity(n), &set) {
            Ok(s) => dc.see(
                set.iter().all(|x| s.contains(x)) && s.is_commutative(),
                || format!("set {k}"),
            ),
            Err(e) => dc.see(false, || format!("set {k}: {e}")),
        }
    }
    vec![
        recon.finish(),
        resolution.finish(),
        formula.finish(),
        stieltjes.finish(),
        identity.finish(),
        abs_sum.finish(),
        orth.finish(),
        parts_pos.finish(),
        root.finish(),
        jordan.finish(),
        carrier.finish(),
        dc.finish(),
    ]
}

fn states(rng: &mut ChaCha8Rng, config: &Config) -> Vec<CheckResult> {
    let mut counts = All::new("state polytope vertex counts");
    let mut cases: Vec<(String, synaptica_core::EffectAlgebra, usize)> = (1..=4)
        .map(|k| {
            (
                format!("2^{k}"),
                oml_to_ea(&catalog::boolean_algebra(k)).expect("Boolean EA"),
                k,
            )
        })
        .collect();
    cases.push(("MO2".into(), oml_to_ea(&catalog::mo2()).expect("MO2 EA"), 4));
    cases.push(("chain3".into(), catalog::lukasiewicz_chain(2), 1));
    for (name, ea, expected) in &cases {
        match state::state_polytope(ea) {
            Ok(p) => counts.see(p.extremal_states().len() == *expected && p.verify(), || {
                format!("{name}: {} vertices", p.extremal_states().len())
            }),
            Err(e) => counts.see(false, || format!("{name}: {e}")),
        }
    }

    let mut order = All::new("positivity through extremal states");
    let mut norm = Worst::new("norm is the sup over extremal states", config.report_tol);
    for k in 0..100 {
        let n = random_size(rng, 1, 6);
        let a = if rng.random_bool(0.5) {
            let s: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
            sample::random_with_spectrum(rng, &s)
        } else {
            random_element(rng, n)
        };
        let r = state::check_fnlprops_sym(&a);
        order.see(r.in_cone == r.positive_by_states, || format!("sym {k}"));
        norm.see((r.family_sup - r.norm).abs() / tol::scale(r.norm), || {
            format!("sym {k}")
        });
        let f = if rng.random_bool(0.5) {
            FnElement::new((0..n).map(|_| rng.random::<f64>()).collect())
        } else {
            sample::random_function(rng, n, 1.0)
        };
        let r = state::check_fnlprops_fn(&f);
        order.see(r.in_cone == r.positive_by_states, || format!("fn {k}"));
        norm.see((r.family_sup - r.norm).abs() / tol::scale(r.norm), || {
            format!("fn {k}")
        });
    }

    let mut extremal = All::new("extremal states of R^X are point evaluations");
    let mut interior = All::new("interior states fail all four conditions");
    for points in 2..=6 {
        let vertices = match simplex_system(points).vertices() {
            Ok(v) => v,
            Err(e) => {
                extremal.see(false, || format!("|X| = {points}: {e}"));
                continue;
            }
        };
        extremal.see(vertices.points().len() == points, || {
            format!("|X| = {points}: vertex count")
        });
        for v in vertices.points() {
            let mu: Vec<f64> = v.iter().map(polytope::to_f64).collect();
            let ok = extremal_commutative_characterization(&mu, &[])
                .is_ok_and(|f| f.agree() && f.vertex && f.min_rule);
            extremal.see(ok, || format!("|X| = {points}: {mu:?}"));
        }
        for j in 0..20 {
            let mu = sample::random_probability(rng, points);
            let ok = extremal_commutative_characterization(&mu, &[])
                .is_ok_and(|f| f.agree() && !f.vertex && !f.min_rule);
            interior.see(ok, || format!("|X| = {points}, state {j}"));
        }
    }

    let mut round = Worst::new("state -> effect map -> state round trip", config.report_tol);
    for k in 0..10 {
        let n = random_size(rng, 1, 4);
        let d = sample::random_density(rng, n);
        match state::extend_density_state(n, |e: &SymMatrix| d.inner(e), rng, 10) {
            Ok(back) => round.see(back.dist(&d), || format!("density {k}")),
            Err(e) => round.fail(format!("density {k}: {e}")),
        }
        let mu = sample::random_probability(rng, n);
        match state::extend_vector_state(n, |f: &FnElement| state::evaluate_vector(&mu, f), rng, 10)
        {
            Ok(back) => round.see(
                back.iter()
                    .zip(&mu)
                    .fold(0.0_f64, |m, (x, y)| m.max((x - y).abs())),
                || format!("vector {k}"),
            ),
            Err(e) => round.fail(format!("vector {k}: {e}")),
        }
    }
    vec![
        counts.finish(),
        order.finish(),
        norm.finish(),
        extremal.finish(),
        interior.finish(),
        round.finish(),
    ]
}

fn stone(rng: &mut ChaCha8Rng, config: &Config) -> Vec<CheckResult> {
    let mut spaces = All::new("stone space of 2^k is a Boolean isomorphism");
    for k in 1..=4 {
        match stone_space(&catalog::boolean_algebra(k)) {
            Ok(s) => spaces.see(s.len() == k && s.verify().is_isomorphism(), || {
                format!("2^{k}")
            }),
            Err(e) => spaces.see(false, || format!("2^{k}: {e}")),
        }
    }
    let mut rejects = All::new("non-Boolean lattices have no stone space");
    rejects.see(
        matches!(stone_space(&catalog::mo2()), Err(Error::NotBoolean)),
        || "MO2".into(),
    );

    let mut psi = Worst::new("psi round-trip residual", config.report_tol);
    let mut psi_props = All::new("psi is a unital multiplicative isometric order-isomorphism");
    let mut transport = Worst::new("extremal states transport across psi", config.report_tol);
    for k in 1..=5 {
        let n = k + rng.random_range(0..2);
        let q = sample::random_orthogonal(rng, n);
        let diag: Vec<f64> = (0..n).map(|i| (i % k) as f64).collect();
        let generator = SymMatrix::from_diagonal(&diag).conjugate(&q);
        let rep = match functional_representation(n, std::slice::from_ref(&generator)) {
            Ok(r) => r,
            Err(e) => {
                psi.fail(format!("k = {k}: {e}"));
                continue;
            }
        };
        let samples: Vec<SymMatrix> = (0..10)
            .map(|_| rep.psi_inverse(&sample::random_function(rng, rep.points(), 1.0)))
            .collect();
        match rep.verify(&samples) {
            Ok(r) => {
                psi.see(r.round_trip_residual, || format!("k = {k}"));
                psi_props.see(r.holds() && rep.points() == k, || format!("k = {k}: {r:?}"));
            }
            Err(e) => psi.fail(format!("k = {k}: {e}")),
        }
        for x in 0..rep.points() {
            let mut mu = vec![0.0; rep.points()];
            mu[x] = 1.0;
            let back = rep.transport_state(&rep.density_for(&mu));
            let err = back
                .iter()
                .zip(&mu)
                .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
            transport.see(err, || format!("k = {k}, point {x}"));
        }
    }

    let mut rickart = All::new("R^X is a Rickart algebra with complete projections");
    for points in 1..=6 {
        let fs: Vec<FnElement> = (0..5)
            .map(|_| {
                FnElement::new(
                    (0..points)
                        .map(|_| rng.random_range(-1..=1) as f64)
                        .collect(),
                )
            })
            .collect();
        rickart.see(check_rickart(points, &fs).is_ok_and(|r| r.holds()), || {
            format!("|X| = {points}")
        });
    }
    vec![
        spaces.finish(),
        rejects.finish(),
        psi.finish(),
        psi_props.finish(),
        transport.finish(),
        rickart.finish(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run("groups", &Config::new(0)).is_err());
    }
}
