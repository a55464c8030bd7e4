//! Exact vertex enumeration for bounded polyhedra `{x : Ax = b, Gx ≤ h}`
//! over the rationals.
//!
//! The equalities are solved once (reduced row echelon form) to an affine
//! parameterization `x = x₀ + N t`. Vertices are the feasible points where
//! `d = dim t` linearly independent inequalities are tight, found by trying
//! every `d`-subset. An empty system comes with a certificate that can be
//! re-checked against the original constraints.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Upper limit on the number of `d`-subsets tried.
pub const MAX_SUBSETS: u128 = 20_000_000;

/// Upper limit on the row count during Fourier–Motzkin elimination.
const MAX_FM_ROWS: usize = 200_000;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn dot(a: &[Q], x: &[Q]) -> Q {
    a.iter().zip(x).fold(Q::zero(), |acc, (u, v)| acc + u * v)
}

/// Constraints `a·x = b` and `g·x ≤ h` in a fixed number of variables.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinearSystem {
    pub vars: usize,
    pub equalities: Vec<(Vec<Q>, Q)>,
    pub inequalities: Vec<(Vec<Q>, Q)>,
}

/// Why a system has no solution.
#[derive(Clone, Debug, PartialEq)]
pub enum Infeasibility {
    /// `y` with `Σ yᵢ aᵢ = 0` and `Σ yᵢ bᵢ ≠ 0`.
    Equalities { multipliers: Vec<Q> },
    /// `z` (free) and `y ≥ 0` with `Σ zᵢ aᵢ + Σ yⱼ gⱼ = 0` and
    /// `Σ zᵢ bᵢ + Σ yⱼ hⱼ < 0`.
    Farkas {
        equality: Vec<Q>,
        inequality: Vec<Q>,
    },
}

/// Result of [`LinearSystem::vertices`].
#[derive(Clone, Debug, PartialEq)]
pub enum Vertices {
    /// `dimension` is the number of free parameters left by the equalities.
    Found {
        dimension: usize,
        points: Vec<Vec<Q>>,
    },
    Empty(Infeasibility),
}

impl Vertices {
    pub fn points(&self) -> &[Vec<Q>] {
        match self {
            Vertices::Found { points, .. } => points,
            Vertices::Empty(_) => &[],
        }
    }
}

impl Infeasibility {
    /// Re-checks the certificate against `system`.
    pub fn verify(&self, system: &LinearSystem) -> bool {
        let n = system.vars;
        match self {
            Infeasibility::Equalities { multipliers } => {
                if multipliers.len() != system.equalities.len() {
                    return false;
                }
                let mut row = vec![Q::zero(); n];
                let mut rhs = Q::zero();
                for (y, (a, b)) in multipliers.iter().zip(&system.equalities) {
                    for (r, x) in row.iter_mut().zip(a) {
                        *r += y * x;
                    }
                    rhs += y * b;
                }
                row.iter().all(Zero::is_zero) && !rhs.is_zero()
            }
            Infeasibility::Farkas {
                equality,
                inequality,
            } => {
                if equality.len() != system.equalities.len()
                    || inequality.len() != system.inequalities.len()
                    || inequality.iter().any(Signed::is_negative)
                {
                    return false;
                }
                let mut row = vec![Q::zero(); n];
                let mut rhs = Q::zero();
                let all = system
                    .equalities
                    .iter()
                    .zip(equality)
                    .chain(system.inequalities.iter().zip(inequality));
                for ((a, b), y) in all {
                    for (r, x) in row.iter_mut().zip(a) {
                        *r += y * x;
                    }
                    rhs += y * b;
                }
                row.iter().all(Zero::is_zero) && rhs.is_negative()
            }
        }
    }
}

/// Reduced row echelon form of `[A | b]`, with the row operations recorded.
struct Echelon {
    /// Rows of the reduced `[A | b]`.
    rows: Vec<Vec<Q>>,
    /// `transform[i]` expresses reduced row `i` as a combination of the
    /// original rows.
    transform: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

fn echelon(system: &LinearSystem) -> Echelon {
    let n = system.vars;
    let m = system.equalities.len();
    let mut rows: Vec<Vec<Q>> = system
        .equalities
        .iter()
        .map(|(a, b)| {
            a.iter()
                .cloned()
                .chain(core::iter::once(b.clone()))
                .collect()
        })
        .collect();
    let mut transform: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        transform.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r].iter_mut().for_each(|x| *x *= &inv);
        transform[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..=n {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
                for j in 0..m {
                    let d = &f * &transform[r][j];
                    transform[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon {
        rows,
        transform,
        pivots,
    }
}

/// Solves a square system exactly; `None` when singular.
fn solve_square(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let d = b.len();
    for c in 0..d {
        let p = (c..d).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        let inv = a[c][c].recip();
        a[c].iter_mut().for_each(|x| *x *= &inv);
        b[c] *= &inv;
        for i in 0..d {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..d {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
                let t = &f * &b[c];
                b[i] -= t;
            }
        }
    }
    Some(b)
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl LinearSystem {
    pub fn new(vars: usize) -> Self {
        LinearSystem {
            vars,
            ..Default::default()
        }
    }

    pub fn add_equality(&mut self, a: Vec<Q>, b: Q) {
        assert_eq!(a.len(), self.vars);
        self.equalities.push((a, b));
    }

    pub fn add_inequality(&mut self, g: Vec<Q>, h: Q) {
        assert_eq!(g.len(), self.vars);
        self.inequalities.push((g, h));
    }

    /// Every constraint holds exactly at `x`.
    pub fn satisfies(&self, x: &[Q]) -> bool {
        self.equalities.iter().all(|(a, b)| &dot(a, x) == b)
            && self.inequalities.iter().all(|(g, h)| &dot(g, x) <= h)
    }

    /// Indices of the inequalities tight at `x`.
    pub fn active(&self, x: &[Q]) -> Vec<usize> {
        (0..self.inequalities.len())
            .filter(|&i| {
                let (g, h) = &self.inequalities[i];
                &dot(g, x) == h
            })
            .collect()
    }

    /// A feasible `x` is a vertex when the equalities and tight inequalities
    /// have full rank.
    pub fn is_vertex(&self, x: &[Q]) -> bool {
        if !self.satisfies(x) {
            return false;
        }
        let rows: Vec<Vec<Q>> = self
            .equalities
            .iter()
            .map(|(a, _)| a.clone())
            .chain(
                self.active(x)
                    .into_iter()
                    .map(|i| self.inequalities[i].0.clone()),
            )
            .collect();
        rank(&rows) == self.vars
    }

    /// All vertices, sorted lexicographically. The feasible region must be
    /// bounded.
    pub fn vertices(&self) -> Result<Vertices> {
        let n = self.vars;
        let ech = echelon(self);
        if let Some(i) = (0..ech.rows.len())
            .find(|&i| ech.rows[i][..n].iter().all(Zero::is_zero) && !ech.rows[i][n].is_zero())
        {
            return Ok(Vertices::Empty(Infeasibility::Equalities {
                multipliers: ech.transform[i].clone(),
            }));
        }
        // x = x0 + N t, one parameter per free column
        let free: Vec<usize> = (0..n).filter(|c| !ech.pivots.contains(c)).collect();
        let d = free.len();
        let mut x0 = vec![Q::zero(); n];
        for (r, &p) in ech.pivots.iter().enumerate() {
            x0[p] = ech.rows[r][n].clone();
        }
        let mut basis = vec![vec![Q::zero(); d]; n];
        for (k, &f) in free.iter().enumerate() {
            basis[f][k] = Q::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                basis[p][k] = -ech.rows[r][f].clone();
            }
        }
        let embed =
            |t: &[Q]| -> Vec<Q> { (0..n).map(|i| x0[i].clone() + dot(&basis[i], t)).collect() };

        // reduced inequalities c·t ≤ g, deduplicated, zero rows set aside
        let mut reduced: Vec<(Vec<Q>, Q, usize)> = Vec::new();
        let mut seen = BTreeSet::new();
        for (j, (gr, h)) in self.inequalities.iter().enumerate() {
            let c: Vec<Q> = (0..d)
                .map(|k| (0..n).fold(Q::zero(), |acc, i| acc + &gr[i] * &basis[i][k]))
                .collect();
            let g = h - dot(gr, &x0);
            if c.iter().all(Zero::is_zero) {
                if g.is_negative() {
                    let mut y = vec![Q::zero(); self.inequalities.len()];
                    y[j] = Q::one();
                    return Ok(Vertices::Empty(self.farkas(&ech, y)));
                }
                continue;
            }
            if seen.insert((c.clone(), g.clone())) {
                reduced.push((c, g, j));
            }
        }

        let feasible = |t: &[Q]| reduced.iter().all(|(c, g, _)| &dot(c, t) <= g);
        let mut found: BTreeSet<Vec<Q>> = BTreeSet::new();
        if d == 0 {
            found.insert(x0.clone());
        } else {
            if binomial(reduced.len(), d) > MAX_SUBSETS {
                return Err(Error::TooLarge(reduced.len(), d));
            }
            for_each_subset(reduced.len(), d, |subset| {
                let a: Vec<Vec<Q>> = subset.iter().map(|&i| reduced[i].0.clone()).collect();
                let b: Vec<Q> = subset.iter().map(|&i| reduced[i].1.clone()).collect();
                if let Some(t) = solve_square(a, b) {
                    if feasible(&t) {
                        found.insert(embed(&t));
                    }
                }
            });
        }
        if found.is_empty() {
            return match self.fourier_motzkin(&reduced, d) {
                Some(y) => Ok(Vertices::Empty(self.farkas(&ech, y))),
                None => Err(Error::Invalid(
                    "feasible region has no vertex (unbounded)".into(),
                )),
            };
        }
        Ok(Vertices::Found {
            dimension: d,
            points: found.into_iter().collect(),
        })
    }

    /// Nonnegative multipliers on the original inequalities proving that the
    /// reduced system is infeasible, by Fourier–Motzkin elimination.
    fn fourier_motzkin(&self, reduced: &[(Vec<Q>, Q, usize)], d: usize) -> Option<Vec<Q>> {
        let k = self.inequalities.len();
        let mut rows: Vec<(Vec<Q>, Q, Vec<Q>)> = reduced
            .iter()
            .map(|(c, g, j)| {
                let mut y = vec![Q::zero(); k];
                y[*j] = Q::one();
                (c.clone(), g.clone(), y)
            })
            .collect();
        for v in 0..d {
            let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
            for r in rows {
                if r.0[v].is_positive() {
                    pos.push(r);
                } else if r.0[v].is_negative() {
                    neg.push(r);
                } else {
                    keep.push(r);
                }
            }
            if keep.len() + pos.len() * neg.len() > MAX_FM_ROWS {
                return None;
            }
            for p in &pos {
                for m in &neg {
                    let (a, b) = (-m.0[v].clone(), p.0[v].clone());
                    let comb = |x: &Q, y: &Q| &a * x + &b * y;
                    keep.push((
                        p.0.iter().zip(&m.0).map(|(x, y)| comb(x, y)).collect(),
                        comb(&p.1, &m.1),
                        p.2.iter().zip(&m.2).map(|(x, y)| comb(x, y)).collect(),
                    ));
                }
            }
            rows = keep;
        }
        rows.into_iter().find(|r| r.1.is_negative()).map(|r| r.2)
    }

    /// Lifts reduced-space multipliers `y` to a certificate in the original
    /// constraints: the equality multipliers `z` solve `zᵀA = −yᵀG`.
    fn farkas(&self, ech: &Echelon, y: Vec<Q>) -> Infeasibility {
        let n = self.vars;
        let m = self.equalities.len();
        let mut w = vec![Q::zero(); n];
        for (yj, (g, _)) in y.iter().zip(&self.inequalities) {
            for (wi, gi) in w.iter_mut().zip(g) {
                *wi -= yj * gi;
            }
        }
        let mut z = vec![Q::zero(); m];
        for (r, &p) in ech.pivots.iter().enumerate() {
            for (zi, ti) in z.iter_mut().zip(&ech.transform[r]) {
                *zi += &w[p] * ti;
            }
        }
        Infeasibility::Farkas {
            equality: z,
            inequality: y,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> LinearSystem {
        let mut s = LinearSystem::new(2);
        for i in 0..2 {
            let mut e = vec![q(0), q(0)];
            e[i] = q(1);
            s.add_inequality(e.clone(), q(1));
            e[i] = q(-1);
            s.add_inequality(e, q(0));
        }
        s
    }

    #[test]
    fn square_has_four_vertices() {
        let s = unit_square();
        let v = s.vertices().unwrap();
        assert_eq!(v.points().len(), 4);
        assert!(v.points().iter().all(|p| s.is_vertex(p)));
        assert_eq!(v.points()[0], vec![q(0), q(0)]);
    }

    #[test]
    fn equality_forces_a_point() {
        let mut s = unit_square();
        s.add_equality(vec![q(1), q(1)], q(1));
        s.add_equality(vec![q(1), q(-1)], q(0));
        let v = s.vertices().unwrap();
        assert_eq!(
            v,
            Vertices::Found {
                dimension: 0,
                points: vec![vec![ratio(1, 2), ratio(1, 2)]]
            }
        );
    }

    #[test]
    fn inconsistent_equalities() {
        let mut s = unit_square();
        s.add_equality(vec![q(1), q(0)], q(1));
        s.add_equality(vec![q(2), q(0)], q(1));
        let Vertices::Empty(cert) = s.vertices().unwrap() else {
            panic!()
        };
        assert!(matches!(cert, Infeasibility::Equalities { .. }));
        assert!(cert.verify(&s));
    }

    #[test]
    fn inconsistent_inequalities() {
        let mut s = unit_square();
        s.add_equality(vec![q(1), q(1)], q(3));
        let Vertices::Empty(cert) = s.vertices().unwrap() else {
            panic!()
        };
        assert!(matches!(cert, Infeasibility::Farkas { .. }));
        assert!(cert.verify(&s));
        // a certificate for one system does not certify a feasible one
        assert!(!cert.verify(&unit_square()));
    }

    #[test]
    fn subsets_in_order() {
        let mut all = Vec::new();
        for_each_subset(4, 2, |s| all.push(s.to_vec()));
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(binomial(32, 3), 4960);
    }
}
