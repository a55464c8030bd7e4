//! States on effect algebras, function algebras and matrix algebras: state
//! polytopes with exact extremal states, the correspondence between states
//! on `V` and states on `E(V, v)`, norm and positivity through states, and
//! the characterizations of extremal states on commutative algebras.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::effect::EffectAlgebra;
use crate::error::{Error, Result};
use crate::order_unit::{
    extend_effect_morphism, FunctionSpace, OrderUnitSpace, RealLine, SymSpace,
};
use crate::polytope::{self, LinearSystem, Vertices, Q};
use crate::stone::functional_representation;
use crate::synaptic::{self, FnElement, SymMatrix, SynapticElement};
use crate::tol;

const EXACT: f64 = 1e-12;

/// `ω(1) = 1`, `0 ≤ ω ≤ 1` and `ω(e ⊕ f) = ω(e) + ω(f)` within `tol`.
pub fn is_ea_state(ea: &EffectAlgebra, omega: &[f64], tol: f64) -> bool {
    let n = ea.len();
    omega.len() == n
        && (omega[ea.one()] - 1.0).abs() <= tol
        && omega.iter().all(|&w| w >= -tol && w <= 1.0 + tol)
        && (0..n).all(|e| {
            (0..n).all(|f| match ea.osum(e, f) {
                Some(s) => (omega[s] - omega[e] - omega[f]).abs() <= tol,
                None => true,
            })
        })
}

/// [`is_ea_state`] in exact arithmetic.
pub fn is_ea_state_exact(ea: &EffectAlgebra, omega: &[Q]) -> bool {
    let n = ea.len();
    omega.len() == n
        && omega[ea.one()].is_one()
        && omega.iter().all(|w| !w.is_negative() && *w <= Q::one())
        && (0..n).all(|e| {
            (0..n).all(|f| match ea.osum(e, f) {
                Some(s) => omega[s] == &omega[e] + &omega[f],
                None => true,
            })
        })
}

/// Nonnegative entries summing to one.
pub fn is_probability_vector(mu: &[f64]) -> bool {
    !mu.is_empty()
        && mu.iter().all(|&m| m >= -tol::FUNCTION_CONE)
        && (mu.iter().sum::<f64>() - 1.0).abs() <= tol::REPORT
}

/// Positive semidefinite with unit trace.
pub fn is_density_matrix(d: &SymMatrix) -> bool {
    synaptic::is_positive(d) && (d.trace() - 1.0).abs() <= tol::REPORT
}

/// `ρ(a) = Σ μ(x) a(x)`
pub fn evaluate_vector(mu: &[f64], a: &FnElement) -> f64 {
    mu.iter().zip(a.values()).map(|(m, x)| m * x).sum()
}

/// `ρ(a) = tr(Da)`
pub fn evaluate_density(d: &SymMatrix, a: &SymMatrix) -> f64 {
    d.inner(a)
}

/// A linear functional on an order-unit space is a state when `ρ(v) = 1`
/// and it is nonnegative on the tested positive elements.
pub fn is_state_on<V: OrderUnitSpace>(
    space: &V,
    rho: impl Fn(&V::Vector) -> f64,
    positives: &[V::Vector],
) -> bool {
    (rho(&space.order_unit()) - 1.0).abs() <= tol::REPORT
        && positives
            .iter()
            .filter(|p| space.in_cone(p))
            .all(|p| rho(p) >= -tol::REPORT * tol::scale(space.norm(p)))
}

/// The state polytope `S(E)` of a finite effect algebra: one variable per
/// element.
#[derive(Clone, Debug)]
pub struct StatePolytope {
    pub system: LinearSystem,
    pub vertices: Vertices,
}

impl StatePolytope {
    /// Free coordinates of a state once the equalities are solved.
    pub fn dimension(&self) -> Option<usize> {
        match self.vertices {
            Vertices::Found { dimension, .. } => Some(dimension),
            Vertices::Empty(_) => None,
        }
    }

    pub fn extremal_states(&self) -> &[Vec<Q>] {
        self.vertices.points()
    }

    pub fn extremal_states_f64(&self) -> Vec<Vec<f64>> {
        self.extremal_states()
            .iter()
            .map(|v| v.iter().map(polytope::to_f64).collect())
            .collect()
    }

    /// Every vertex satisfies the constraints exactly, has a full-rank
    /// active set, and is not the midpoint of two other vertices.
    pub fn verify(&self) -> bool {
        let v = self.extremal_states();
        let two = polytope::q(2);
        v.iter().all(|p| self.system.is_vertex(p))
            && v.iter().enumerate().all(|(i, p)| {
                (0..v.len()).all(|j| {
                    (j + 1..v.len()).all(|k| {
                        j == i
                            || k == i
                            || p.iter()
                                .zip(&v[j])
                                .zip(&v[k])
                                .any(|((x, y), z)| x * &two != y + z)
                    })
                })
            })
    }
}

/// `ω(1) = 1`, `ω(e) + ω(f) − ω(e ⊕ f) = 0` for every defined sum (each
/// distinct row once), and `0 ≤ ω ≤ 1`.
pub fn ea_state_system(ea: &EffectAlgebra) -> LinearSystem {
    let n = ea.len();
    let mut s = LinearSystem::new(n);
    let unit = |i: usize, c: i64| {
        let mut r = vec![Q::zero(); n];
        r[i] = polytope::q(c);
        r
    };
    s.add_equality(unit(ea.one(), 1), Q::one());
    for e in 0..n {
        for f in e..n {
            if let Some(sum) = ea.osum(e, f) {
                let mut r = vec![Q::zero(); n];
                r[e] += Q::one();
                r[f] += Q::one();
                r[sum] -= Q::one();
                if r.iter().any(|x| !x.is_zero()) && !s.equalities.iter().any(|(a, _)| *a == r) {
                    s.add_equality(r, Q::zero());
                }
            }
        }
    }
    for e in 0..n {
        s.add_inequality(unit(e, -1), Q::zero());
        s.add_inequality(unit(e, 1), Q::one());
    }
    s
}

pub fn state_polytope(ea: &EffectAlgebra) -> Result<StatePolytope> {
    let system = ea_state_system(ea);
    let vertices = system.vertices()?;
    Ok(StatePolytope { system, vertices })
}

/// The probability simplex on `points` points, as a linear system.
pub fn simplex_system(points: usize) -> LinearSystem {
    let mut s = LinearSystem::new(points);
    s.add_equality(vec![Q::one(); points], Q::one());
    for x in 0..points {
        let mut r = vec![Q::zero(); points];
        r[x] = -Q::one();
        s.add_inequality(r, Q::zero());
    }
    s
}

/// Restriction of `ρ(a) = Σ μ(x) a(x)` to the unit interval, then extension
/// back to `ℝ^X`: returns the recovered probability vector.
pub fn extend_vector_state<R: Rng + ?Sized>(
    points: usize,
    omega: impl Fn(&FnElement) -> f64,
    rng: &mut R,
    samples: usize,
) -> Result<Vec<f64>> {
    let space = FunctionSpace { points };
    let ext = extend_effect_morphism(omega, &space, &RealLine, rng, samples)?;
    Ok((0..points)
        .map(|x| ext.apply(&FnElement::indicator(points, &[x])))
        .collect())
}

/// Extension of a state on `E(Sym(n))` to `Sym(n)`, returned as the density
/// matrix `D = Σ ξ(bₖ) bₖ` over an orthonormal basis.
pub fn extend_density_state<R: Rng + ?Sized>(
    n: usize,
    omega: impl Fn(&SymMatrix) -> f64,
    rng: &mut R,
    samples: usize,
) -> Result<SymMatrix> {
    let space = SymSpace { n };
    let ext = extend_effect_morphism(omega, &space, &RealLine, rng, samples)?;
    let basis = SymMatrix::zeros(n).basis();
    Ok(basis.iter().fold(SymMatrix::zeros(n), |acc, b| {
        acc.add(&b.scale(ext.apply(b)))
    }))
}

/// Positivity and norm of one element read off an extremal family of states.
#[derive(Clone, Debug, PartialEq)]
pub struct FnlReport {
    pub norm: f64,
    pub in_cone: bool,
    /// Least value of `ρ(a)` over the family.
    pub family_min: f64,
    /// Largest `|ρ(a)|` over the family.
    pub family_sup: f64,
    pub positive_by_states: bool,
    /// A state of the family with `ρ(a) < 0` (eigenvector, or indicator of a
    /// point), when `a` is not positive.
    pub witness: Option<Vec<f64>>,
}

impl FnlReport {
    pub fn agrees(&self) -> bool {
        self.in_cone == self.positive_by_states
            && (self.family_sup - self.norm).abs() <= tol::REPORT * tol::scale(self.norm)
    }

    fn build(norm: f64, in_cone: bool, slack: f64, family: Vec<(f64, Vec<f64>)>) -> Self {
        let (min_value, min_state) = family
            .iter()
            .min_by(|a, b| a.0.total_cmp(&b.0))
            .cloned()
            .unwrap_or((0.0, Vec::new()));
        let family_sup = family.iter().fold(0.0_f64, |m, (v, _)| m.max(v.abs()));
        let positive_by_states = min_value >= -slack;
        FnlReport {
            norm,
            in_cone,
            family_min: min_value,
            family_sup,
            positive_by_states,
            witness: (!positive_by_states).then_some(min_state),
        }
    }
}

/// The family is the pure states `vᵀ a v` at the eigenvectors of `a`.
pub fn check_fnlprops_sym(a: &SymMatrix) -> FnlReport {
    let eig = a.eigen();
    let family = (0..a.n())
        .map(|k| {
            let v = eig.vector(k);
            (a.quadratic_form(&v), v)
        })
        .collect();
    let norm = a.norm();
    FnlReport::build(
        norm,
        synaptic::is_positive(a),
        tol::PSD_REL * tol::scale(norm),
        family,
    )
}

/// The family is the point evaluations `γ_x`.
pub fn check_fnlprops_fn(a: &FnElement) -> FnlReport {
    let n = a.len();
    let family = (0..n)
        .map(|x| {
            let mut e = vec![0.0; n];
            e[x] = 1.0;
            (a.at(x), e)
        })
        .collect();
    let space = FunctionSpace { points: n };
    FnlReport::build(a.norm(), space.in_cone(a), tol::FUNCTION_CONE, family)
}

/// `‖ρ‖ = sup{|tr(Da)| : ‖a‖ ≤ 1}`, attained at `a = sign(D)`; returns the
/// norm and that maximizer.
pub fn density_functional_norm(d: &SymMatrix) -> (f64, SymMatrix) {
    let sign = synaptic::functional_calculus(d, |l| if l >= 0.0 { 1.0 } else { -1.0 });
    (d.inner(&sign), sign)
}

/// `‖ρ‖ = Σ |μ(x)|`, attained at the sign vector of `μ`.
pub fn vector_functional_norm(mu: &[f64]) -> (f64, FnElement) {
    let sign = FnElement::new(
        mu.iter()
            .map(|&m| if m >= 0.0 { 1.0 } else { -1.0 })
            .collect(),
    );
    (evaluate_vector(mu, &sign), sign)
}

/// The conditions characterizing extremal states on `ℝ^X`.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutativeFlags {
    /// (i) `μ` is a vertex of the exactly enumerated simplex.
    pub vertex: bool,
    /// (ii) `ρ = γ_x`.
    pub point_evaluation: Option<usize>,
    /// (iii) `ρ(ab) = ρ(a)ρ(b)` on all pairs of point indicators.
    pub multiplicative: bool,
    /// (iv) `ρ(p) ∈ {0, 1}` for every indicator `p`.
    pub sharp: bool,
    /// `ρ(a ∧ b) = min(ρ(a), ρ(b))` on all tested positive pairs.
    pub min_rule: bool,
    /// A positive pair breaking the min-rule.
    pub min_rule_witness: Option<(FnElement, FnElement)>,
}

impl CommutativeFlags {
    /// The four conditions are all true or all false.
    pub fn agree(&self) -> bool {
        let f = [
            self.vertex,
            self.point_evaluation.is_some(),
            self.multiplicative,
            self.sharp,
        ];
        f.iter().all(|&x| x == f[0])
    }

    pub fn extremal(&self) -> bool {
        self.vertex
    }
}

/// Evaluates the four conditions and the min-rule for a state `μ` on `ℝ^X`.
/// The min-rule is tested on all pairs of point indicators and on
/// `extra_pairs`. `|X| ≤ 16`.
pub fn extremal_commutative_characterization(
    mu: &[f64],
    extra_pairs: &[(FnElement, FnElement)],
) -> Result<CommutativeFlags> {
    let n = mu.len();
    if !is_probability_vector(mu) {
        return Err(Error::Invalid("not a probability vector".into()));
    }
    if n > 16 {
        return Err(Error::TooLarge(n, 16));
    }
    if extra_pairs
        .iter()
        .any(|(a, b)| a.len() != n || b.len() != n)
    {
        return Err(Error::InstanceMismatch);
    }
    let rho = |a: &FnElement| evaluate_vector(mu, a);
    let point = |x: usize| FnElement::indicator(n, &[x]);

    let simplex = simplex_system(n).vertices()?;
    let vertex = simplex.points().iter().any(|v| {
        v.iter()
            .zip(mu)
            .all(|(q, &m)| (polytope::to_f64(q) - m).abs() <= EXACT)
    });

    let point_evaluation =
        (0..n).find(|&x| (0..n).all(|y| (rho(&point(y)) - point(y).at(x)).abs() <= EXACT));

    let multiplicative = (0..n).all(|x| {
        (0..n).all(|y| {
            (rho(&point(x).mul(&point(y))) - rho(&point(x)) * rho(&point(y))).abs() <= EXACT
        })
    });

    let sharp = (0..1u64 << n).all(|m| {
        let v = rho(&FnElement::indicator_mask(n, m));
        v.abs() <= EXACT || (v - 1.0).abs() <= EXACT
    });

    let mut pairs: Vec<(FnElement, FnElement)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            pairs.push((point(x), point(y)));
        }
    }
    pairs.extend(extra_pairs.iter().cloned());
    let min_rule_witness = pairs.into_iter().find(|(a, b)| {
        let meet = FnElement::new(
            a.values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| x.min(*y))
                .collect(),
        );
        (rho(&meet) - rho(a).min(rho(b))).abs() > EXACT
    });

    Ok(CommutativeFlags {
        vertex,
        point_evaluation,
        multiplicative,
        sharp,
        min_rule: min_rule_witness.is_none(),
        min_rule_witness,
    })
}

/// The characterization for the commutative subalgebra of `Sym(n)`
/// generated by `generators`, with the state given by a density matrix.
/// Non-commuting generators are rejected with the offending pair.
pub fn extremal_commutative_characterization_sym(
    n: usize,
    generators: &[SymMatrix],
    density: &SymMatrix,
) -> Result<CommutativeFlags> {
    let rep = functional_representation(n, generators)?;
    extremal_commutative_characterization(&rep.transport_state(density), &[])
}
