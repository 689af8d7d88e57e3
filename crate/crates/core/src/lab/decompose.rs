//! Constructive subadditivity in dimension two.
//!
//! The boundary of `N(ab)` is walked vertex by vertex. Each vertex is written
//! as `a_i + b_i` with generators of `a` and `b`; whenever both summands change
//! between consecutive vertices, `a_i + b_{i+1}` (which lies on the same edge)
//! is inserted. Consecutive points then share a summand, and the region
//! `conv{β_i, β_{i+1}} + σ^∨` whose interior holds `p + u0` yields the split.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{hull_plus_cone, poly_contains, MembershipReport};
use crate::ideal::MonomialIdeal;
use crate::multiplier::{membership_in, shift};
use crate::point::{LatticePoint, RatPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    FromA,
    FromB,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition2D {
    pub point: LatticePoint,
    /// A minimal generator of `a` (for `FromA`) or of `b` (for `FromB`).
    pub witness_generator: LatticePoint,
    pub side: Side,
    /// Index of the boundary region used, into the refined vertex sequence.
    pub region_index: usize,
    pub segment: (LatticePoint, LatticePoint),
    /// `p + u0 - witness` tested against the relative interior of the other
    /// ideal's Newton polyhedron.
    pub remainder_check: MembershipReport,
}

impl Decomposition2D {
    /// Re-checks by arithmetic that `x^p = x^g * x^(p-g)` with `x^g` in the
    /// multiplier ideal of one side and `x^(p-g)` in that of the other.
    pub fn validate(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> std::result::Result<(), String> {
        let (own, other) = match self.side {
            Side::FromA => (a, b),
            Side::FromB => (b, a),
        };
        if !own.generators().contains(&self.witness_generator) {
            return Err(format!("{} is not a generator", self.witness_generator));
        }
        let u0 = shift(a).map_err(|e| e.to_string())?;
        let own_newton = own.newton_polyhedron().map_err(|e| e.to_string())?;
        let other_newton = other.newton_polyhedron().map_err(|e| e.to_string())?;
        let first = membership_in(&own_newton, own, &u0, &self.witness_generator).map_err(|e| e.to_string())?;
        if !first.member {
            return Err(format!("witness {} is not in its multiplier ideal", self.witness_generator));
        }
        let rest = &self.point - &self.witness_generator;
        let second = membership_in(&other_newton, other, &u0, &rest).map_err(|e| e.to_string())?;
        if !second.member {
            return Err(format!("remainder {rest} is not in the other multiplier ideal"));
        }
        if second.report != self.remainder_check {
            return Err("stored remainder report does not match recomputation".into());
        }
        Ok(())
    }
}

/// For `x^p ∈ J(ab)` on a two-dimensional ring, finds a generator `g` of `a`
/// (or `b`) with `p + u0 ∈ g + relint N(b)` (resp. `relint N(a)`).
pub fn decompose_2d(p: &LatticePoint, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<Decomposition2D> {
    let ring = a.ring();
    if ring.dim() != 2 {
        return Err(Error::NotDimension2(ring.dim()));
    }
    let ab = a.product(b)?;
    let u0 = shift(a)?;
    let newton_ab = ab.newton_polyhedron()?;
    if !membership_in(&newton_ab, &ab, &u0, p)?.member {
        return Err(Error::NotInMultiplierIdeal(p.clone()));
    }

    // boundary order: increasing pairing with the first ray of σ
    let first_ray = &ring.sigma_rays()[0];
    let mut vertices: Vec<LatticePoint> = newton_ab.vertices().to_vec();
    vertices.sort_by_key(|v| v.dot(first_ray));

    let tagged: Vec<(LatticePoint, LatticePoint)> = vertices
        .iter()
        .map(|v| {
            a.generators()
                .iter()
                .flat_map(|ga| b.generators().iter().map(move |gb| (ga, gb)))
                .filter(|(ga, gb)| &(*ga + *gb) == v)
                .map(|(ga, gb)| (ga.clone(), gb.clone()))
                .min()
                .expect("vertices of N(ab) are sums of generators")
        })
        .collect();

    let mut refined: Vec<(LatticePoint, LatticePoint)> = Vec::with_capacity(2 * tagged.len());
    for tag in &tagged {
        if let Some(prev) = refined.last().cloned() {
            if prev.0 != tag.0 && prev.1 != tag.1 {
                refined.push((prev.0.clone(), tag.1.clone()));
            }
        }
        refined.push(tag.clone());
    }

    let shifted: RatPoint = &p.to_rat() + &u0;
    let segments: Vec<(usize, usize)> =
        if refined.len() == 1 { vec![(0, 0)] } else { (0..refined.len() - 1).map(|i| (i, i + 1)).collect() };

    for (idx, &(i, j)) in segments.iter().enumerate() {
        let beta_i = &refined[i].0 + &refined[i].1;
        let beta_j = &refined[j].0 + &refined[j].1;
        let region = hull_plus_cone(&[beta_i.clone(), beta_j.clone()], ring.dual_cone())?;
        if !poly_contains(&region, &shifted, true)?.inside {
            continue;
        }
        let (side, witness, other) = if refined[i].0 == refined[j].0 {
            (Side::FromA, refined[i].0.clone(), b)
        } else {
            (Side::FromB, refined[i].1.clone(), a)
        };
        let remainder = &shifted - &witness.to_rat();
        let remainder_check = poly_contains(&other.newton_polyhedron()?, &remainder, true)?;
        return Ok(Decomposition2D {
            point: p.clone(),
            witness_generator: witness,
            side,
            region_index: idx,
            segment: (beta_i, beta_j),
            remainder_check,
        });
    }
    Err(Error::NoDecomposition(p.clone()))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::multiplier::multiplier_ideal;
    use crate::ring::ToricRing;

    #[test]
    fn orthant_coordinate_ideals() {
        let ring = Arc::new(ToricRing::orthant(2));
        let a = MonomialIdeal::from_i64s(&ring, &[&[1, 0]]).unwrap();
        let b = MonomialIdeal::from_i64s(&ring, &[&[0, 1]]).unwrap();
        let d = decompose_2d(&LatticePoint::from([1, 1]), &a, &b).unwrap();
        assert_eq!(d.side, Side::FromA);
        assert_eq!(d.witness_generator, LatticePoint::from([1, 0]));
        assert!(d.remainder_check.inside);
        d.validate(&a, &b).unwrap();
    }

    #[test]
    fn orthant_equal_ideals() {
        let ring = Arc::new(ToricRing::orthant(2));
        let a = MonomialIdeal::from_i64s(&ring, &[&[1, 0]]).unwrap();
        let d = decompose_2d(&LatticePoint::from([2, 1]), &a, &a).unwrap();
        assert_eq!(d.side, Side::FromA);
        assert_eq!(d.witness_generator, LatticePoint::from([1, 0]));
        d.validate(&a, &a).unwrap();
    }

    #[test]
    fn every_generator_in_plane_ring() {
        let ring = Arc::new(ToricRing::from_i64s(&[&[2, 1], &[1, 2]]).unwrap());
        let a = MonomialIdeal::from_i64s(&ring, &[&[2, 4]]).unwrap();
        let b = MonomialIdeal::from_i64s(&ring, &[&[12, 7]]).unwrap();
        let j = multiplier_ideal(&a.product(&b).unwrap()).unwrap();
        for p in j.ideal.generators() {
            decompose_2d(p, &a, &b).unwrap().validate(&a, &b).unwrap();
        }
    }

    #[test]
    fn insertion_when_both_summands_change() {
        let ring = Arc::new(ToricRing::orthant(2));
        let a = MonomialIdeal::from_i64s(&ring, &[&[0, 2], &[2, 0]]).unwrap();
        let b = MonomialIdeal::from_i64s(&ring, &[&[0, 3], &[3, 0]]).unwrap();
        let j = multiplier_ideal(&a.product(&b).unwrap()).unwrap();
        for p in j.ideal.generators() {
            decompose_2d(p, &a, &b).unwrap().validate(&a, &b).unwrap();
        }
    }

    #[test]
    fn rejects_non_members_and_wrong_dimension() {
        let ring = Arc::new(ToricRing::orthant(2));
        let a = MonomialIdeal::from_i64s(&ring, &[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(
            decompose_2d(&LatticePoint::from([0, 0]), &a, &a),
            Err(Error::NotInMultiplierIdeal(LatticePoint::from([0, 0])))
        );
        let ring3 = Arc::new(ToricRing::orthant(3));
        let u = MonomialIdeal::unit(&ring3);
        assert_eq!(decompose_2d(&LatticePoint::zero(3), &u, &u), Err(Error::NotDimension2(3)));
    }
}
