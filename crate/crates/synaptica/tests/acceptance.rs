//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line
//! with its runtime; the process fails if any criterion fails or runs over
//! its time budget.

use std::collections::HashMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use synaptica::corpus;
use synaptica_core::effect::check_ea_axioms;
use synaptica_core::linalg::Matrix;
use synaptica_core::mv::{ea_to_mv, mv_to_ea, MvAlgebra};
use synaptica_core::order_unit::{
    self, extend_effect_morphism, FunctionSpace, OrderUnitSpace, SymSpace,
};
use synaptica_core::polytope::{self, q};
use synaptica_core::state::{self, extremal_commutative_characterization, simplex_system};
use synaptica_core::stone::{functional_representation, stone_space};
use synaptica_core::synaptic::{
    formula_step, orthomodular_residual, proj_join, proj_leq, proj_meet, stieltjes_reconstruct,
    SpectralResolution,
};
use synaptica_core::{
    catalog, sample, synaptic, tol, EffectTable, Error, FnElement, SymMatrix, SynapticElement,
};

type Outcome = Result<String, String>;

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + criterion)
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

/// Axioms checked by brute force on a dense copy of the table.
fn oracle_is_effect_algebra(t: &EffectTable) -> bool {
    let n = t.len();
    let op = |e: usize, f: usize| t.get(e, f);
    let comm = (0..n).all(|e| (0..n).all(|f| op(e, f) == op(f, e)));
    let assoc = (0..n).all(|d| {
        (0..n).all(|e| {
            (0..n).all(|f| match (op(e, f), op(d, e)) {
                (Some(ef), _) if op(d, ef).is_some() => {
                    op(d, e).and_then(|de| op(de, f)) == op(d, ef)
                }
                _ => true,
            })
        })
    });
    let supp = (0..n).all(|e| (0..n).filter(|&f| op(e, f) == Some(t.one)).count() == 1);
    let zero_one = (0..n).all(|e| e == t.zero || op(e, t.one).is_none());
    comm && assoc && supp && zero_one
}

fn criterion_1() -> Outcome {
    let mut rng = rng(1);
    let mut checked = 0;
    for (name, ea) in corpus::curated_effect_algebras() {
        ensure(check_ea_axioms(ea.table()).is_ok(), || {
            format!("{name} rejected")
        })?;
        ensure(oracle_is_effect_algebra(ea.table()), || {
            format!("{name} fails the oracle")
        })?;
        let sample = corpus::mutations(ea.table(), 20, &mut rng);
        ensure(sample.mutations.len() == 20 || sample.exhausted, || {
            format!("{name}: too few mutations")
        })?;
        for m in &sample.mutations {
            ensure(!oracle_is_effect_algebra(&m.table), || {
                format!("{name}: {:?} is valid", m.cell)
            })?;
            match check_ea_axioms(&m.table) {
                Err(Error::Axiom(v)) if v.confirmed_by(&m.table) => checked += 1,
                other => return Err(format!("{name}: cell {:?} gave {other:?}", m.cell)),
            }
        }
    }
    Ok(format!(
        "{checked} mutations rejected with confirmed witnesses"
    ))
}

fn lukasiewicz_law(m: &MvAlgebra) -> bool {
    let n = m.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let lhs = m.add(m.perp(m.add(m.perp(x), y)), y);
            let rhs = m.add(m.perp(m.add(m.perp(y), x)), x);
            lhs == rhs
        })
    })
}

fn criterion_2() -> Outcome {
    let mut models: Vec<(String, synaptica_core::EffectAlgebra)> =
        corpus::curated_effect_algebras()
            .into_iter()
            .filter(|(_, e)| e.is_mv_effect_algebra())
            .collect();
    models.extend((1..=6).map(|m| (format!("L{m}"), catalog::lukasiewicz_chain(m))));
    let mut pairs = 0;
    for (name, ea) in &models {
        let m = ea_to_mv(ea).map_err(|e| format!("{name}: {e}"))?;
        let back = mv_to_ea(&m).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.table() == ea.table(), || {
            format!("{name}: EA round trip")
        })?;
        let again = ea_to_mv(&back).map_err(|e| format!("{name}: {e}"))?;
        ensure(again == m, || format!("{name}: MV round trip"))?;
        ensure(lukasiewicz_law(&m), || format!("{name}: (x' + y)' + y law"))?;
        pairs += m.len() * m.len();
    }
    Ok(format!("{} models, {pairs} pairs", models.len()))
}

fn conjugate_diag(values: &[f64], u: &Matrix) -> SymMatrix {
    SymMatrix::from_diagonal(values).conjugate(u)
}

fn criterion_3() -> Outcome {
    let mut rng = rng(3);
    let (mut recon, mut step, mut stieltjes) = (0.0_f64, 0.0_f64, 0.0_f64);
    for k in 0..200 {
        let n: usize = rng.random_range(1..=8);
        let distinct: Vec<f64> = (0..n).map(|_| sample::gaussian(&mut rng)).collect();
        let values: Vec<f64> = if rng.random_bool(0.5) {
            (0..n).map(|i| distinct[i % n.div_ceil(2)]).collect()
        } else {
            distinct
        };
        let u = sample::random_orthogonal(&mut rng, n);
        let a = conjugate_diag(&values, &u);
        let scale = tol::scale(a.norm());
        let res = SpectralResolution::new(&a);
        recon = recon.max(res.reconstruct().dist(&a) / scale);

        let mut jumps = values.clone();
        jumps.sort_by(f64::total_cmp);
        jumps.dedup();
        ensure(res.eigenvalues().len() == jumps.len(), || {
            format!("element {k}: spectrum size")
        })?;
        let mids: Vec<f64> = jumps.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        let outside = [jumps[0] - 1.0, jumps[jumps.len() - 1] + 1.0];
        for &l in jumps.iter().chain(&mids).chain(&outside) {
            let expected = conjugate_diag(
                &values
                    .iter()
                    .map(|&v| if v <= l { 1.0 } else { 0.0 })
                    .collect::<Vec<_>>(),
                &u,
            );
            step = step
                .max(formula_step(&a, l).dist(&expected))
                .max(res.step(l).dist(&expected));
        }
        let s = stieltjes_reconstruct(&a, 1e-3).map_err(|e| format!("element {k}: {e}"))?;
        stieltjes = stieltjes.max(s.dist(&a));
    }
    ensure(recon <= 1e-9, || {
        format!("reconstruction residual {recon:e}")
    })?;
    ensure(step <= 1e-9, || format!("step residual {step:e}"))?;
    ensure(stieltjes <= 1e-3, || {
        format!("stieltjes error {stieltjes:e}")
    })?;
    Ok(format!(
        "reconstruction {recon:.1e}, steps {step:.1e}, stieltjes {stieltjes:.1e}"
    ))
}

fn criterion_4() -> Outcome {
    let mut rng = rng(4);
    let mut disjoint_pairs = 0;
    for k in 0..500 {
        let n = rng.random_range(1..=6);
        let u = sample::random_orthogonal(&mut rng, n);
        let mask_a: u32 = rng.random_range(0..1 << n);
        let mask_b: u32 = match k % 3 {
            0 => rng.random_range(0..1 << n) & !mask_a,
            1 => mask_a | rng.random_range(0..1 << n),
            _ => rng.random_range(0..1 << n),
        };
        let mut diag = |mask: u32| -> Vec<f64> {
            (0..n)
                .map(|i| {
                    if mask & (1 << i) == 0 {
                        0.0
                    } else {
                        let x: f64 = rng.random_range(0.05..3.0);
                        if rng.random_bool(0.5) {
                            x
                        } else {
                            -x
                        }
                    }
                })
                .collect()
        };
        let a = conjugate_diag(&diag(mask_a), &u);
        let b = conjugate_diag(&diag(mask_b), &u);
        let expected = mask_a & mask_b == 0;
        disjoint_pairs += usize::from(expected);
        let (ca, cb) = (synaptic::carrier(&a), synaptic::carrier(&b));
        let expected_ca = conjugate_diag(
            &(0..n)
                .map(|i| f64::from(mask_a >> i & 1))
                .collect::<Vec<_>>(),
            &u,
        );
        ensure(ca.dist(&expected_ca) <= 1e-8, || {
            format!("pair {k}: carrier of a")
        })?;
        let verdicts = [
            synaptic::product_is_zero(&a, &b),
            synaptic::product_is_zero(&ca, &b),
            synaptic::product_is_zero(&cb, &ca),
        ];
        ensure(verdicts.iter().all(|&v| v == expected), || {
            format!("pair {k}: {verdicts:?}, expected {expected}")
        })?;
    }
    Ok(format!("500 pairs, {disjoint_pairs} with ab = 0"))
}

fn criterion_5() -> Outcome {
    let mut rng = rng(5);
    let spectrum = |rng: &mut ChaCha8Rng, n: usize| -> Vec<f64> {
        let positive = rng.random_bool(0.5);
        let mut s: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..2.0)).collect();
        if positive {
            if rng.random_bool(0.3) {
                s[0] = 0.0;
            }
        } else {
            s[0] = -rng.random_range(1e-3..2.0);
        }
        s.iter()
            .map(|&x| x * if rng.random_bool(0.2) { 3.0 } else { 1.0 })
            .collect()
    };
    let mut worst = 0.0_f64;
    for k in 0..200 {
        let n = rng.random_range(1..=6);
        let s = spectrum(&mut rng, n);
        let positive = s.iter().all(|&x| x >= 0.0);
        let norm = s.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let a = sample::random_with_spectrum(&mut rng, &s);
        let r = state::check_fnlprops_sym(&a);
        ensure((r.family_min >= -1e-9) == positive, || {
            format!("sym {k}: min {} for {s:?}", r.family_min)
        })?;
        ensure(
            r.positive_by_states == positive && r.in_cone == positive,
            || format!("sym {k}: cone"),
        )?;
        worst = worst.max((r.family_sup - norm).abs() / tol::scale(norm));

        let s = spectrum(&mut rng, n);
        let positive = s.iter().all(|&x| x >= 0.0);
        let norm = s.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let r = state::check_fnlprops_fn(&FnElement::new(s.clone()));
        ensure((r.family_min >= -1e-9) == positive, || {
            format!("fn {k}: min {} for {s:?}", r.family_min)
        })?;
        ensure(
            r.positive_by_states == positive && r.in_cone == positive,
            || format!("fn {k}: cone"),
        )?;
        worst = worst.max((r.family_sup - norm).abs() / tol::scale(norm));
    }
    ensure(worst <= 1e-9, || format!("norm gap {worst:e}"))?;
    Ok(format!("400 elements, norm gap {worst:.1e}"))
}

fn linearity<V, W, F>(
    name: &str,
    omega: F,
    source: &V,
    target: &W,
    rng: &mut ChaCha8Rng,
) -> Result<(f64, f64), String>
where
    V: OrderUnitSpace,
    W: OrderUnitSpace,
    F: Fn(&V::Vector) -> W::Vector,
{
    let ext = extend_effect_morphism(omega, source, target, rng, 20)
        .map_err(|e| format!("{name}: {e}"))?;
    let (mut linear, mut restrict) = (0.0_f64, 0.0_f64);
    for _ in 0..100 {
        let a = order_unit::random_vector(source, rng);
        let b = order_unit::random_vector(source, rng);
        let (s, t) = (sample::gaussian(rng), sample::gaussian(rng));
        let lhs = ext.apply(&source.combine(s, &a, t, &b));
        let rhs = target.combine(s, &ext.apply(&a), t, &ext.apply(&b));
        let size = s.abs() * source.norm(&a) + t.abs() * source.norm(&b);
        linear = linear.max(target.distance(&lhs, &rhs) / tol::scale(size));
        let e = order_unit::random_effect(source, rng);
        restrict = restrict.max(target.distance(&ext.apply(&e), &ext.omega(&e)));
    }
    Ok((linear, restrict))
}

fn criterion_6() -> Outcome {
    let mut rng = rng(6);
    let mut worst = (0.0_f64, 0.0_f64);
    let mut fold = |(l, r): (f64, f64)| worst = (worst.0.max(l), worst.1.max(r));
    for n in 2..=4 {
        let space = SymSpace { n };
        let u = sample::random_orthogonal(&mut rng, n);
        fold(linearity(
            "conjugation",
            |e: &SymMatrix| e.conjugate(&u),
            &space,
            &space,
            &mut rng,
        )?);
        let diag = FunctionSpace { points: n };
        let take_diagonal = |e: &SymMatrix| FnElement::new((0..n).map(|i| e.get(i, i)).collect());
        fold(linearity(
            "diagonal",
            take_diagonal,
            &space,
            &diag,
            &mut rng,
        )?);
        let source = FunctionSpace { points: n };
        let target = FunctionSpace { points: n + 2 };
        let sigma: Vec<usize> = (0..n + 2).map(|_| rng.random_range(0..n)).collect();
        let pullback = |f: &FnElement| FnElement::new(sigma.iter().map(|&x| f.at(x)).collect());
        fold(linearity("pullback", pullback, &source, &target, &mut rng)?);
    }
    let (linear, restrict) = worst;
    ensure(linear <= 1e-9, || format!("linearity residual {linear:e}"))?;
    ensure(restrict <= 1e-9, || {
        format!("restriction residual {restrict:e}")
    })?;

    let mut round = 0.0_f64;
    for k in 0..20 {
        let n = 1 + k % 5;
        let d = sample::random_density(&mut rng, n);
        let back = state::extend_density_state(n, |e: &SymMatrix| d.inner(e), &mut rng, 10)
            .map_err(|e| format!("density {k}: {e}"))?;
        round = round.max(back.dist(&d));
        let mu = sample::random_probability(&mut rng, n);
        let back = state::extend_vector_state(
            n,
            |f: &FnElement| state::evaluate_vector(&mu, f),
            &mut rng,
            10,
        )
        .map_err(|e| format!("vector {k}: {e}"))?;
        round = round.max(
            back.iter()
                .zip(&mu)
                .fold(0.0, |m: f64, (x, y)| m.max((x - y).abs())),
        );
    }
    ensure(round <= 1e-9, || format!("state round trip {round:e}"))?;
    Ok(format!(
        "linear {linear:.1e}, restriction {restrict:.1e}, round trip {round:.1e}"
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = rng(7);
    for points in 2..=6 {
        let vertices = simplex_system(points)
            .vertices()
            .map_err(|e| e.to_string())?;
        ensure(vertices.points().len() == points, || {
            format!("|X| = {points}: vertex count")
        })?;
        let mut seen = vec![false; points];
        for v in vertices.points() {
            let x = v
                .iter()
                .position(|c| *c == q(1))
                .ok_or("vertex is not a coordinate evaluation")?;
            ensure(
                v.iter()
                    .enumerate()
                    .all(|(y, c)| *c == if y == x { q(1) } else { q(0) }),
                || format!("|X| = {points}: {v:?}"),
            )?;
            seen[x] = true;
            let mu: Vec<f64> = v.iter().map(polytope::to_f64).collect();
            let f = extremal_commutative_characterization(&mu, &[]).map_err(|e| e.to_string())?;
            ensure(
                f.vertex && f.point_evaluation == Some(x) && f.multiplicative && f.sharp,
                || format!("|X| = {points}: flags at {x}: {f:?}"),
            )?;
            ensure(f.min_rule, || format!("|X| = {points}: min rule at {x}"))?;
        }
        ensure(seen.iter().all(|&s| s), || {
            format!("|X| = {points}: missing evaluations")
        })?;
        for j in 0..100 {
            let mut mu = sample::random_probability(&mut rng, points);
            if j % 4 == 0 && points > 2 {
                // a point on a face of dimension at least one
                let drop = rng.random_range(0..points);
                let moved = mu[drop];
                mu[drop] = 0.0;
                mu[(drop + 1) % points] += moved;
            }
            let f = extremal_commutative_characterization(&mu, &[]).map_err(|e| e.to_string())?;
            ensure(
                !f.vertex && f.point_evaluation.is_none() && !f.multiplicative && !f.sharp,
                || format!("|X| = {points}, state {j}: {f:?}"),
            )?;
            ensure(!f.min_rule && f.min_rule_witness.is_some(), || {
                format!("|X| = {points}, state {j}: min rule")
            })?;
        }
    }
    Ok("|X| = 2..6, 100 interior states each".into())
}

fn criterion_8() -> Outcome {
    let mut rng = rng(8);
    for k in 1..=4 {
        let b = catalog::boolean_algebra(k);
        let s = stone_space(&b).map_err(|e| format!("2^{k}: {e}"))?;
        ensure(s.len() == k, || format!("2^{k}: {} points", s.len()))?;
        ensure(s.verify().is_isomorphism(), || {
            format!("2^{k}: not an isomorphism")
        })?;
        let sizes: HashMap<usize, usize> = (0..b.len())
            .map(|e| (e, s.stone_map(e).count_ones() as usize))
            .collect();
        let atoms = (0..b.len())
            .filter(|&e| b.poset().covers(b.zero()).contains(&e))
            .count();
        ensure(
            atoms == k && sizes[&b.one()] == k && sizes[&b.zero()] == 0,
            || format!("2^{k}: K_b sizes"),
        )?;

        let n = k;
        let d: Vec<f64> = (0..n).map(|i| i as f64).collect();
        let rep = functional_representation(n, &[SymMatrix::from_diagonal(&d)])
            .map_err(|e| format!("Sym({k}): {e}"))?;
        ensure(rep.points() == k, || {
            format!("Sym({k}): {} points", rep.points())
        })?;
        let samples: Vec<SymMatrix> = (0..8)
            .map(|_| {
                SymMatrix::from_diagonal(
                    &(0..n)
                        .map(|_| sample::gaussian(&mut rng))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let report = rep.verify(&samples).map_err(|e| format!("Sym({k}): {e}"))?;
        ensure(report.holds(), || format!("Sym({k}): {report:?}"))?;
        for a in &samples {
            let f = rep.psi(a);
            let mut image = f.values().to_vec();
            let mut diagonal: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
            image.sort_by(f64::total_cmp);
            diagonal.sort_by(f64::total_cmp);
            let gap = image
                .iter()
                .zip(&diagonal)
                .fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()));
            ensure(gap <= 1e-12, || {
                format!("Sym({k}): psi is not the diagonal")
            })?;
        }
        let mut hit = vec![false; k];
        for x in 0..k {
            let mut mu = vec![0.0; k];
            mu[x] = 1.0;
            let density = rep.density_for(&mu);
            ensure(state::is_density_matrix(&density), || {
                format!("Sym({k}): density at {x}")
            })?;
            let back = rep.transport_state(&density);
            let y = back
                .iter()
                .position(|&v| (v - 1.0).abs() <= 1e-12)
                .ok_or("no evaluation")?;
            ensure(y == x && back.iter().sum::<f64>() - 1.0 <= 1e-12, || {
                format!("Sym({k}): transport at {x}")
            })?;
            hit[y] = true;
        }
        ensure(hit.iter().all(|&h| h), || {
            format!("Sym({k}): transport is not onto")
        })?;
    }
    Ok("2^1..2^4 and diagonal Sym(1..4)".into())
}

fn criterion_9() -> Outcome {
    let mut rng = rng(9);
    for k in 1..=4 {
        let c = catalog::boolean_algebra(k).classify();
        ensure(c.is_boolean && c.is_oml == Some(true), || {
            format!("2^{k}: {c:?}")
        })?;
    }
    let mo2 = catalog::mo2().classify();
    ensure(mo2.is_oml == Some(true) && !mo2.is_distributive, || {
        format!("MO2: {mo2:?}")
    })?;
    let o6 = catalog::hexagon_o6().classify();
    ensure(o6.is_oml == Some(false), || format!("O6: {o6:?}"))?;

    let mut worst = 0.0_f64;
    for k in 0..10_000 {
        let (rx, ry) = (rng.random_range(0..=4), rng.random_range(0..=4));
        let x = sample::random_projection(&mut rng, 4, rx);
        let y = sample::random_projection(&mut rng, 4, ry);
        let (p, q) = if k % 2 == 0 {
            let q = proj_join(&x, &y).map_err(|e| e.to_string())?;
            (x, q)
        } else {
            let p = proj_meet(&x, &y).map_err(|e| e.to_string())?;
            (p, x)
        };
        ensure(proj_leq(&p, &q).map_err(|e| e.to_string())?, || {
            format!("pair {k}: p is not below q")
        })?;
        let residual = orthomodular_residual(&p, &q).map_err(|e| format!("pair {k}: {e}"))?;
        let gap = synaptic::spectrum(&q.sub(&p))[0];
        worst = worst.max(residual).max(-gap);
    }
    ensure(worst <= 1e-9, || format!("residual {worst:e}"))?;
    Ok(format!("10000 pairs, residual {worst:.1e}"))
}

fn criterion_10() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_synaptica");
    let run = || {
        Command::new(bin)
            .args(["verify", "all", "--seed", "0"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.code() == Some(0), || {
        format!(
            "exit {:?}: {}",
            first.status.code(),
            String::from_utf8_lossy(&first.stdout)
        )
    })?;
    ensure(second.status.code() == Some(0), || {
        format!("second run exit {:?}", second.status.code())
    })?;
    ensure(first.stdout == second.stdout, || "reports differ".into())?;
    Ok(format!("{} identical bytes", first.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("effect-algebra axiom oracle", criterion_1, 1),
        ("MV equivalence", criterion_2, 1),
        ("spectral resolution", criterion_3, 10),
        ("carrier law", criterion_4, 5),
        ("order/norm duality", criterion_5, 5),
        ("extension machinery", criterion_6, 5),
        ("extremal states of R^X", criterion_7, 5),
        ("stone pipeline", criterion_8, 2),
        ("OML battery", criterion_9, 10),
        ("CLI determinism", criterion_10, 60),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget} s"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
