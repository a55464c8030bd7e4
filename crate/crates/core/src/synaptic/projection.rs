use super::{commutes, is_effect, is_projection, leq, SynapticElement};
use crate::error::{Error, Result};

fn check_pair<T: SynapticElement>(p: &T, q: &T) -> Result<()> {
    if !p.same_algebra(q) {
        return Err(Error::InstanceMismatch);
    }
    if !is_projection(p) || !is_projection(q) {
        return Err(Error::NotProjection);
    }
    Ok(())
}

/// `p^⊥ = 1 − p`
pub fn proj_perp<T: SynapticElement>(p: &T) -> Result<T> {
    if !is_projection(p) {
        return Err(Error::NotProjection);
    }
    Ok(p.unit().sub(p))
}

/// The projection onto `range(p) ∩ range(q)`.
pub fn proj_meet<T: SynapticElement>(p: &T, q: &T) -> Result<T> {
    check_pair(p, q)?;
    Ok(p.range_meet(q))
}

/// `p ∨ q = (p^⊥ ∧ q^⊥)^⊥`
pub fn proj_join<T: SynapticElement>(p: &T, q: &T) -> Result<T> {
    check_pair(p, q)?;
    let one = p.unit();
    Ok(one.sub(&one.sub(p).range_meet(&one.sub(q))))
}

pub fn proj_leq<T: SynapticElement>(p: &T, q: &T) -> Result<bool> {
    check_pair(p, q)?;
    leq(p, q)
}

/// `‖q − (p ∨ (q ∧ p^⊥))‖` for projections `p ≤ q`; zero in an OML.
pub fn orthomodular_residual<T: SynapticElement>(p: &T, q: &T) -> Result<f64> {
    if !proj_leq(p, q)? {
        return Err(Error::Invalid(
            "the orthomodular identity needs p ≤ q".into(),
        ));
    }
    let rhs = proj_join(p, &proj_meet(q, &proj_perp(p)?)?)?;
    Ok(rhs.dist(q))
}

/// `e ∧ p = pe` for an effect `e` commuting with a projection `p`. Meets of
/// non-commuting pairs are not computed.
pub fn effect_projection_meet<T: SynapticElement>(e: &T, p: &T) -> Result<T> {
    if !e.same_algebra(p) {
        return Err(Error::InstanceMismatch);
    }
    if !is_projection(p) {
        return Err(Error::NotProjection);
    }
    if !is_effect(e) {
        return Err(Error::Invalid("not an effect".into()));
    }
    if !commutes(e, p) {
        return Err(Error::Invalid(
            "the effect and projection do not commute".into(),
        ));
    }
    Ok(e.jordan_unchecked(p))
}

/// A proper convex splitting `e = ½(e + t d) + ½(e − t d)` of an effect into
/// two distinct effects, or `None` when `e` is a projection (an extreme
/// point of the effect interval).
pub fn convex_split<T: SynapticElement>(e: &T) -> Result<Option<(T, T)>> {
    if !is_effect(e) {
        return Err(Error::Invalid("not an effect".into()));
    }
    let tol = e.rank_tolerance();
    let inner = e
        .spectral_clusters()
        .into_iter()
        .find(|&(l, _)| l > tol && l < 1.0 - tol);
    Ok(inner.map(|(l, d)| {
        let t = l.min(1.0 - l);
        (e.add(&d.scale(t)), e.sub(&d.scale(t)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synaptic::{FnElement, SymMatrix};
    use alloc::vec;

    #[test]
    fn complements() {
        let p = SymMatrix::rank_one(&[1., 2.]);
        let pp = proj_perp(&p).unwrap();
        assert!(proj_meet(&p, &pp).unwrap().norm() < 1e-12);
        assert!(proj_join(&p, &pp).unwrap().dist(&SymMatrix::identity(2)) < 1e-12);
    }

    #[test]
    fn commuting_meet_is_product() {
        let p = SymMatrix::from_diagonal(&[1., 1., 0.]);
        let q = SymMatrix::from_diagonal(&[0., 1., 1.]);
        let m = proj_meet(&p, &q).unwrap();
        assert!(m.dist(&SymMatrix::from_diagonal(&[0., 1., 0.])) < 1e-12);
        assert!(m.dist(&p.jordan_unchecked(&q)) < 1e-12);
    }

    #[test]
    fn skew_lines() {
        let p = SymMatrix::from_diagonal(&[1., 0.]);
        let q = SymMatrix::rank_one(&[1., 1.]);
        assert!(proj_meet(&p, &q).unwrap().norm() < 1e-12);
        assert!(proj_join(&p, &q).unwrap().dist(&SymMatrix::identity(2)) < 1e-12);
        assert_eq!(
            proj_meet(&p, &SymMatrix::identity(2).scale(0.5)).unwrap_err(),
            Error::NotProjection
        );
    }

    #[test]
    fn splitting_effects() {
        let e = SymMatrix::from_diagonal(&[0.25, 1.0]);
        let (x, y) = convex_split(&e).unwrap().unwrap();
        assert!(is_effect(&x) && is_effect(&y) && x.dist(&y) > 0.1);
        assert!(x.add(&y).scale(0.5).dist(&e) < 1e-15);
        assert!(convex_split(&SymMatrix::rank_one(&[3., 4.]))
            .unwrap()
            .is_none());
        assert!(convex_split(&FnElement::new(vec![0., 1., 1.]))
            .unwrap()
            .is_none());
        assert!(convex_split(&SymMatrix::from_diagonal(&[2., 0.])).is_err());
    }

    #[test]
    fn commuting_effect_meet() {
        let e = SymMatrix::from_diagonal(&[0.5, 0.25]);
        let p = SymMatrix::from_diagonal(&[0., 1.]);
        assert!(
            effect_projection_meet(&e, &p)
                .unwrap()
                .dist(&SymMatrix::from_diagonal(&[0., 0.25]))
                < 1e-15
        );
        assert!(effect_projection_meet(&e, &SymMatrix::rank_one(&[1., 1.])).is_err());
    }
}
