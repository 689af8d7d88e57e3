//! The three-dimensional counterexample to subadditivity on the complete
//! intersection `K[x²y, xy, xy², z]`, and the data needed to re-derive it.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::geometry::{ConvexCertificate, Halfspace};
use crate::ideal::MonomialIdeal;
use crate::lab::construct::ConstructionRecipe;
use crate::point::{LatticePoint, RatPoint};
use crate::ring::ToricRing;

/// `σ^∨` spanned by the exponents of `x²y`, `xy²` and `z`.
pub fn dual_rays() -> Vec<LatticePoint> {
    vec![LatticePoint::from([2, 1, 0]), LatticePoint::from([1, 2, 0]), LatticePoint::from([0, 0, 1])]
}

pub fn ring() -> Arc<ToricRing> {
    Arc::new(ToricRing::from_dual_rays(&dual_rays()).expect("cone is full-dimensional and pointed"))
}

/// `a = (x²y⁴, x¹⁰y⁶z²)`.
pub fn ideal_a() -> MonomialIdeal {
    MonomialIdeal::from_i64s(&ring(), &[&[2, 4, 0], &[10, 6, 2]]).expect("monomials of the ring")
}

/// `b = (x¹²y⁷, x¹⁰y⁶z²)`.
pub fn ideal_b() -> MonomialIdeal {
    MonomialIdeal::from_i64s(&ring(), &[&[12, 7, 0], &[10, 6, 2]]).expect("monomials of the ring")
}

pub fn u0() -> LatticePoint {
    LatticePoint::from([1, 1, 1])
}

/// Minimal generators of `ab`.
pub fn product_generators() -> Vec<LatticePoint> {
    vec![
        LatticePoint::from([12, 10, 2]),
        LatticePoint::from([14, 11, 0]),
        LatticePoint::from([20, 12, 4]),
        LatticePoint::from([22, 13, 2]),
    ]
}

/// `v = (18, 12, 2)`, interior to `N(ab)`.
pub fn target() -> LatticePoint {
    LatticePoint::from([18, 12, 2])
}

/// `x^17 y^11 z`, in `J(ab)` but not in `J(a)J(b)`.
pub fn witness() -> LatticePoint {
    LatticePoint::from([17, 11, 1])
}

fn hs(normal: &[i64], offset: i64) -> Halfspace {
    Halfspace::from_i64s(normal, offset)
}

/// Facets of `N(a)`, sorted.
pub fn facets_a() -> Vec<Halfspace> {
    let mut f =
        vec![hs(&[2, -1, 0], 0), hs(&[-1, 4, 0], 14), hs(&[-1, 2, 0], 2), hs(&[-1, 2, 2], 6), hs(&[0, 0, 1], 0)];
    f.sort();
    f
}

/// Facets of `N(b)`, sorted.
pub fn facets_b() -> Vec<Halfspace> {
    let mut f = vec![hs(&[2, -1, 0], 14), hs(&[-1, 2, 0], 2), hs(&[4, -2, 3], 34), hs(&[0, 0, 1], 0)];
    f.sort();
    f
}

/// Four affinely independent points of `N(ab)` with barycentric weights
/// (5/16, 1/16, 1/8, 1/2) summing to `v`.
pub fn interior_certificate() -> ConvexCertificate {
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    ConvexCertificate {
        points: vec![
            RatPoint::from_ratios(&[(14, 1), (11, 1), (0, 1)]),
            RatPoint::from_ratios(&[(18, 1), (13, 1), (0, 1)]),
            RatPoint::from_ratios(&[(16, 1), (12, 1), (4, 1)]),
            RatPoint::from_ratios(&[(21, 1), (25, 2), (3, 1)]),
        ],
        coefficients: vec![q(5, 16), q(1, 16), q(1, 8), q(1, 2)],
    }
}

/// Points `v - g` for each generator `g` of one ideal, which fail to lie in
/// the relative interior of the other ideal's Newton polyhedron. Each entry is
/// (point, true if it is tested against `N(b)`, false for `N(a)`).
pub fn naive_split_exclusions() -> Vec<(LatticePoint, bool)> {
    vec![
        (LatticePoint::from([16, 8, 2]), true),
        (LatticePoint::from([8, 6, 0]), true),
        (LatticePoint::from([6, 5, 2]), false),
        (LatticePoint::from([8, 6, 0]), false),
    ]
}

/// `R' = K[x²y, xy, xy²]`, `I' = (x²y⁴)`, `J' = (x¹²y⁷)`, `r = x⁸y⁶`, `Z = x¹⁰y⁶z²`.
pub fn recipe() -> ConstructionRecipe {
    let base = Arc::new(ToricRing::from_i64s(&[&[2, 1], &[1, 2]]).expect("plane cone"));
    ConstructionRecipe {
        i_prime: MonomialIdeal::from_i64s(&base, &[&[2, 4]]).expect("monomial"),
        j_prime: MonomialIdeal::from_i64s(&base, &[&[12, 7]]).expect("monomial"),
        base_ring: base,
        r: LatticePoint::from([8, 6]),
        z_exponent: LatticePoint::from([10, 6, 2]),
    }
}
