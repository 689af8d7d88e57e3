//! Normal affine toric rings `K[M ∩ σ^∨]`, described by the rays of `σ^∨`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::{dual_cone, PolyCone};
use crate::linalg::{self, to_rational_rows};
use crate::point::{check_dim, LatticePoint, RatPoint};

/// The canonical-divisor datum of a toric ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GorensteinData {
    /// `<u0, n_i> = 1` for every primitive ray `n_i` of σ.
    Gorenstein {
        u0: LatticePoint,
    },
    /// `w0` primitive with `<w0, n_i> = r` for every `n_i`, `r > 1`.
    QGorenstein {
        w0: LatticePoint,
        #[serde(serialize_with = "crate::point::serialize_int", deserialize_with = "crate::point::deserialize_int")]
        r: BigInt,
    },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToricRing {
    dual: PolyCone,
    sigma: PolyCone,
    gorenstein: GorensteinData,
}

impl ToricRing {
    /// Builds the ring from generators of `σ^∨`. Rays are made primitive and
    /// deduplicated; non-extreme generators are dropped.
    pub fn from_dual_rays(rays: &[LatticePoint]) -> Result<ToricRing> {
        let dual = PolyCone::new(rays)?;
        let sigma = dual_cone(&dual)?;
        let gorenstein = match solve_canonical(&sigma) {
            None => GorensteinData::None,
            Some(u) => match u.to_lattice() {
                Some(u0) => GorensteinData::Gorenstein { u0 },
                None => {
                    let scaled = u.scale(&BigRational::from_integer(u.denominator_lcm()));
                    let w0 = scaled.to_lattice().expect("denominators cleared").primitive();
                    let r = w0.dot(&sigma.rays()[0]);
                    GorensteinData::QGorenstein { w0, r }
                }
            },
        };
        Ok(ToricRing { dual, sigma, gorenstein })
    }

    pub fn from_i64s(rays: &[&[i64]]) -> Result<ToricRing> {
        let pts: Vec<LatticePoint> = rays.iter().map(|r| LatticePoint::from_i64s(r)).collect();
        ToricRing::from_dual_rays(&pts)
    }

    /// The polynomial ring in `d` variables (σ^∨ the positive orthant).
    pub fn orthant(d: usize) -> ToricRing {
        let rays: Vec<LatticePoint> = (0..d)
            .map(|i| {
                let mut v = vec![0i64; d];
                v[i] = 1;
                LatticePoint::from_i64s(&v)
            })
            .collect();
        ToricRing::from_dual_rays(&rays).expect("orthant is full-dimensional and pointed")
    }

    pub fn dim(&self) -> usize {
        self.dual.dim()
    }

    pub fn dual_cone(&self) -> &PolyCone {
        &self.dual
    }

    pub fn dual_rays(&self) -> &[LatticePoint] {
        self.dual.rays()
    }

    /// Primitive generators of σ.
    pub fn sigma_rays(&self) -> &[LatticePoint] {
        self.sigma.rays()
    }

    pub fn gorenstein(&self) -> &GorensteinData {
        &self.gorenstein
    }

    pub fn gorenstein_point(&self) -> Option<&LatticePoint> {
        match &self.gorenstein {
            GorensteinData::Gorenstein { u0 } => Some(u0),
            _ => None,
        }
    }

    /// `(w0, r)` with `w0` primitive and `<w0, n_i> = r` for all sigma rays;
    /// `r = 1` exactly when the ring is Gorenstein.
    pub fn q_gorenstein_data(&self) -> Option<(LatticePoint, BigInt)> {
        match &self.gorenstein {
            GorensteinData::Gorenstein { u0 } => Some((u0.clone(), BigInt::one())),
            GorensteinData::QGorenstein { w0, r } => Some((w0.clone(), r.clone())),
            GorensteinData::None => None,
        }
    }

    /// The rational point `u0 = w0 / r`.
    pub fn canonical_shift(&self) -> Option<RatPoint> {
        self.q_gorenstein_data().map(|(w0, r)| w0.to_rat().scale(&BigRational::new(BigInt::one(), r)))
    }

    /// `w ∈ M ∩ σ^∨`; by normality this is a cone test.
    pub fn semigroup_contains(&self, w: &LatticePoint) -> Result<bool> {
        check_dim(self.dim(), w.dim())?;
        Ok(self.contains_unchecked(w))
    }

    pub(crate) fn contains_unchecked(&self, w: &LatticePoint) -> bool {
        self.sigma.rays().iter().all(|n| !n.dot(w).is_negative())
    }

    /// `g <= w` in the divisibility order: `w - g ∈ σ^∨`.
    pub(crate) fn divides(&self, g: &LatticePoint, w: &LatticePoint) -> bool {
        self.sigma.rays().iter().all(|n| n.dot(g) <= n.dot(w))
    }

    /// Sigma pairings `(<w, n_1>, ..., <w, n_m>)`.
    pub fn pairings(&self, w: &LatticePoint) -> Vec<BigInt> {
        self.sigma.rays().iter().map(|n| n.dot(w)).collect()
    }
}

/// Solves `<u, n_i> = 1` for all rays of σ; `None` if inconsistent.
fn solve_canonical(sigma: &PolyCone) -> Option<RatPoint> {
    let rows: Vec<Vec<BigInt>> = sigma.rays().iter().map(|n| n.coords().to_vec()).collect();
    let ones = vec![BigRational::one(); rows.len()];
    linalg::solve_unique(&to_rational_rows(&rows), &ones).map(RatPoint::new)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn example_ring_is_gorenstein() {
        let ring = ToricRing::from_i64s(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(ring.gorenstein_point(), Some(&LatticePoint::from([1, 1, 1])));
        assert_eq!(ring.q_gorenstein_data(), Some((LatticePoint::from([1, 1, 1]), BigInt::one())));
    }

    #[test]
    fn q_gorenstein_cone() {
        let ring = ToricRing::from_i64s(&[&[1, 0], &[1, 3]]).unwrap();
        assert_eq!(ring.gorenstein_point(), None);
        assert_eq!(ring.q_gorenstein_data(), Some((LatticePoint::from([2, 3]), BigInt::from(3))));
        assert_eq!(ring.canonical_shift(), Some(RatPoint::from_ratios(&[(2, 3), (1, 1)])));
    }

    #[test]
    fn input_rays_are_cleaned() {
        let a = ToricRing::from_i64s(&[&[4, 2], &[1, 2], &[2, 1], &[3, 3]]).unwrap();
        let b = ToricRing::from_i64s(&[&[2, 1], &[1, 2]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn non_q_gorenstein_cone() {
        let ring = non_q_gorenstein();
        assert_eq!(ring.sigma_rays().len(), 4);
        assert_eq!(ring.gorenstein(), &GorensteinData::None);
        assert_eq!(ring.canonical_shift(), None);
    }

    /// σ over a quadrilateral whose rays lie on no common height-one plane.
    pub(crate) fn non_q_gorenstein() -> ToricRing {
        let sigma = PolyCone::from_i64s(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 2]]).unwrap();
        ToricRing::from_dual_rays(&sigma.facet_normals()).unwrap()
    }

    #[test]
    fn semigroup_membership() {
        let ring = ToricRing::from_i64s(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 1]]).unwrap();
        assert!(ring.semigroup_contains(&LatticePoint::from([1, 1, 0])).unwrap());
        assert!(!ring.semigroup_contains(&LatticePoint::from([1, 0, 0])).unwrap());
        assert!(ring.semigroup_contains(&LatticePoint::zero(3)).unwrap());
        assert_eq!(
            ring.semigroup_contains(&LatticePoint::from([1, 1])),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        );
    }
}
