//! Exhaustive search for a splitting `v = α' + β` with `α' ∈ relint N(a)` and
//! `β + u0 ∈ relint N(b)`, where `α' = α + u0` for lattice points `α`, `β`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::poly_contains;
use crate::ideal::MonomialIdeal;
use crate::lattice::Region;
use crate::multiplier::shift;
use crate::point::{LatticePoint, RatPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingBound {
    pub sigma_ray: LatticePoint,
    #[serde(serialize_with = "crate::point::serialize_int", deserialize_with = "crate::point::deserialize_int")]
    pub lo: BigInt,
    #[serde(serialize_with = "crate::point::serialize_int", deserialize_with = "crate::point::deserialize_int")]
    pub hi: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub alpha: LatticePoint,
    pub alpha_shifted: RatPoint,
    pub beta: LatticePoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationReport {
    pub target: RatPoint,
    pub u0: RatPoint,
    /// Bounds on `<α', n_i>` for every ray of σ.
    pub search_bounds: Vec<PairingBound>,
    pub decompositions_found: Vec<Decomposition>,
    pub scanned_count: u64,
}

impl RefutationReport {
    pub fn refuted(&self) -> bool {
        self.decompositions_found.is_empty()
    }
}

/// Scans every lattice `α` with `0 <= <α, n_i> <= <v - u0, n_i>`.
///
/// The bounds are sufficient: `α' ∈ relint N(a)` and `β + u0 ∈ relint N(b)`
/// force `α, β ∈ σ^∨`, and `α + β = v - u0`.
pub fn exhaustive_refute(v: &RatPoint, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<RefutationReport> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    crate::point::check_dim(ring.dim(), v.dim())?;
    let u0 = shift(a)?;
    let p = (v - &u0).to_lattice().ok_or_else(|| Error::InvalidTarget(format!("{v} - u0 is not a lattice point")))?;
    let newton_a = a.newton_polyhedron()?;
    let newton_b = b.newton_polyhedron()?;

    let mut region = Region::new(ring.dim(), Vec::new());
    let mut search_bounds = Vec::new();
    let mut empty = false;
    for n in ring.sigma_rays() {
        let hi = n.dot(&p);
        if hi < BigInt::zero() {
            empty = true;
        }
        region.push_slab(n, &BigInt::zero(), &hi);
        search_bounds.push(PairingBound { sigma_ray: n.clone(), lo: BigInt::one(), hi: hi + BigInt::one() });
    }

    let mut scanned_count = 0u64;
    let mut decompositions_found = Vec::new();
    if !empty {
        region.for_each_lattice_point(|alpha| {
            scanned_count += 1;
            let alpha_shifted = &alpha.to_rat() + &u0;
            if !poly_contains(&newton_a, &alpha_shifted, true).map(|r| r.inside).unwrap_or(false) {
                return;
            }
            let beta = &p - &alpha;
            let beta_shifted = &beta.to_rat() + &u0;
            if poly_contains(&newton_b, &beta_shifted, true).map(|r| r.inside).unwrap_or(false) {
                decompositions_found.push(Decomposition { alpha, alpha_shifted, beta });
            }
        })?;
    }
    Ok(RefutationReport { target: v.clone(), u0, search_bounds, decompositions_found, scanned_count })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ring::ToricRing;

    #[test]
    fn unit_ideals_split_twice_u0() {
        let ring = Arc::new(ToricRing::from_i64s(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 1]]).unwrap());
        let unit = MonomialIdeal::unit(&ring);
        let report = exhaustive_refute(&LatticePoint::from([2, 2, 2]).to_rat(), &unit, &unit).unwrap();
        // every α' with all pairings in {1, 2} works: four points
        assert_eq!(report.scanned_count, 4);
        assert_eq!(report.decompositions_found.len(), 4);
        assert!(report
            .decompositions_found
            .iter()
            .any(|dc| dc.alpha_shifted == LatticePoint::from([2, 2, 2]).to_rat() && dc.beta == LatticePoint::zero(3)));
    }

    #[test]
    fn target_must_be_lattice_after_shift() {
        let ring = Arc::new(ToricRing::from_i64s(&[&[1, 0], &[1, 3]]).unwrap());
        let unit = MonomialIdeal::unit(&ring);
        let err = exhaustive_refute(&LatticePoint::from([1, 1]).to_rat(), &unit, &unit).unwrap_err();
        assert!(matches!(err, Error::InvalidTarget(_)));
        let v = RatPoint::from_ratios(&[(8, 3), (2, 1)]);
        assert!(!exhaustive_refute(&v, &unit, &unit).unwrap().refuted());
    }

    #[test]
    fn target_below_the_cone_scans_nothing() {
        let ring = Arc::new(ToricRing::orthant(2));
        let unit = MonomialIdeal::unit(&ring);
        let report = exhaustive_refute(&LatticePoint::from([0, 3]).to_rat(), &unit, &unit).unwrap();
        assert_eq!(report.scanned_count, 0);
        assert!(report.refuted());
    }
}
