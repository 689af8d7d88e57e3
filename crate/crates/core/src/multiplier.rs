//! Multiplier ideals of monomial ideals on (Q-)Gorenstein toric rings:
//! `J(a) = <x^w : w + u0 ∈ relint N(a)>`, with `u0 = w0 / r`.

use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{poly_contains, FacetEvaluation, Halfspace, MembershipReport, NewtonPolyhedron};
use crate::ideal::MonomialIdeal;
use crate::lattice::minimal_lattice_points;
use crate::point::{check_dim, LatticePoint, RatPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierResult {
    pub ideal: MonomialIdeal,
    pub u0: RatPoint,
    /// For each generator `g`, the facet values at `g + u0` (all strict).
    pub facet_report: Vec<(LatticePoint, Vec<FacetEvaluation>)>,
}

/// Outcome of testing one monomial for membership in a multiplier ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierMembership {
    pub exponent: LatticePoint,
    pub member: bool,
    pub in_semigroup: bool,
    /// Facet evaluations at the shifted point `w + u0`.
    pub report: MembershipReport,
}

pub(crate) fn shift(ideal: &MonomialIdeal) -> Result<RatPoint> {
    ideal.ring().canonical_shift().ok_or(Error::NotQGorenstein)
}

/// The region `(relint N) - u0` as strict halfspaces.
fn shifted_interior(newton: &NewtonPolyhedron, u0: &RatPoint) -> Vec<Halfspace> {
    newton
        .facets()
        .iter()
        .map(|h| {
            let offset: BigRational = h.offset() - h.value(u0);
            Halfspace::new(h.normal().to_vec(), offset, true)
        })
        .collect()
}

pub fn multiplier_ideal(a: &MonomialIdeal) -> Result<MultiplierResult> {
    let u0 = shift(a)?;
    let newton = a.newton_polyhedron()?;
    let ring = a.ring();
    let gens = minimal_lattice_points(ring.dual_rays(), ring.sigma_rays(), &shifted_interior(&newton, &u0))?;
    let facet_report = gens
        .iter()
        .map(|g| {
            let shifted = &g.to_rat() + &u0;
            let report = poly_contains(&newton, &shifted, true).expect("dimensions agree");
            debug_assert!(report.inside);
            (g.clone(), report.evaluations)
        })
        .collect();
    let ideal = MonomialIdeal::minimalize_unchecked(&Arc::clone(ring), gens);
    Ok(MultiplierResult { ideal, u0, facet_report })
}

/// Tests a single monomial `x^w` for membership in `J(a)`.
pub fn multiplier_membership(a: &MonomialIdeal, w: &LatticePoint) -> Result<MultiplierMembership> {
    let u0 = shift(a)?;
    let newton = a.newton_polyhedron()?;
    check_dim(a.ring().dim(), w.dim())?;
    membership_in(&newton, a, &u0, w)
}

pub(crate) fn membership_in(
    newton: &NewtonPolyhedron,
    a: &MonomialIdeal,
    u0: &RatPoint,
    w: &LatticePoint,
) -> Result<MultiplierMembership> {
    let in_semigroup = a.ring().semigroup_contains(w)?;
    let report = poly_contains(newton, &(&w.to_rat() + u0), true)?;
    Ok(MultiplierMembership { exponent: w.clone(), member: in_semigroup && report.inside, in_semigroup, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::FacetStatus;
    use crate::ring::ToricRing;

    fn example_ring() -> Arc<ToricRing> {
        Arc::new(ToricRing::from_i64s(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 1]]).unwrap())
    }

    #[test]
    fn orthant_square_powers() {
        let ring = Arc::new(ToricRing::orthant(2));
        let a = MonomialIdeal::from_i64s(&ring, &[&[2, 0], &[0, 2]]).unwrap();
        let j = multiplier_ideal(&a).unwrap();
        assert_eq!(j.ideal.generators(), &[LatticePoint::from([0, 1]), LatticePoint::from([1, 0])]);
        let origin = multiplier_membership(&a, &LatticePoint::from([0, 0])).unwrap();
        assert!(!origin.member);
        let tight: Vec<_> = origin.report.obstructions().collect();
        assert_eq!(tight.len(), 1);
        assert_eq!(tight[0].value, BigRational::from_integer(2.into()));
    }

    #[test]
    fn unit_ideal_is_fixed() {
        let ring = example_ring();
        let j = multiplier_ideal(&MonomialIdeal::unit(&ring)).unwrap();
        assert!(j.ideal.is_unit());
    }

    #[test]
    fn membership_in_example_ideals() {
        let ring = example_ring();
        let a = MonomialIdeal::from_i64s(&ring, &[&[2, 4, 0], &[10, 6, 2]]).unwrap();
        let b = MonomialIdeal::from_i64s(&ring, &[&[12, 7, 0], &[10, 6, 2]]).unwrap();

        assert!(multiplier_membership(&a, &LatticePoint::from([7, 5, 1])).unwrap().member);

        let m = multiplier_membership(&a, &LatticePoint::from([7, 5, 0])).unwrap();
        assert!(!m.member);
        let obs: Vec<_> = m.report.obstructions().collect();
        assert_eq!(obs.len(), 1);
        assert_eq!(obs[0].facet, Halfspace::from_i64s(&[-1, 2, 2], 6));
        assert_eq!(obs[0].status, FacetStatus::Tight);

        let m = multiplier_membership(&b, &LatticePoint::from([10, 6, 0])).unwrap();
        assert!(!m.member);
        let obs: Vec<_> = m.report.obstructions().collect();
        assert_eq!(obs.len(), 1);
        assert_eq!(obs[0].facet, Halfspace::from_i64s(&[4, -2, 3], 34));
        assert_eq!(obs[0].value, BigRational::from_integer(33.into()));
        assert_eq!(obs[0].status, FacetStatus::Violated);
    }

    #[test]
    fn errors() {
        let ring = Arc::new(crate::ring::tests::non_q_gorenstein());
        assert_eq!(multiplier_ideal(&MonomialIdeal::unit(&ring)).unwrap_err(), Error::NotQGorenstein);
        let ring = example_ring();
        assert_eq!(multiplier_ideal(&MonomialIdeal::zero(&ring)).unwrap_err(), Error::ZeroIdeal);
        assert_eq!(
            multiplier_membership(&MonomialIdeal::unit(&ring), &LatticePoint::from([1, 1])).unwrap_err(),
            Error::DimensionMismatch { expected: 3, found: 2 }
        );
    }

    #[test]
    fn q_gorenstein_shift_is_rational() {
        let ring = Arc::new(ToricRing::from_i64s(&[&[1, 0], &[1, 3]]).unwrap());
        let j = multiplier_ideal(&MonomialIdeal::unit(&ring)).unwrap();
        assert_eq!(j.u0, RatPoint::from_ratios(&[(2, 3), (1, 1)]));
        assert!(j.ideal.is_unit());
    }
}
