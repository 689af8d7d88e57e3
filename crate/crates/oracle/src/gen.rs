//! Random rings and ideals for property suites.

use std::sync::Arc;

use rand::Rng;
use toricmult::{LatticePoint, MonomialIdeal, ToricRing};

use crate::{to_point, OracleRing};

/// A random ring with `ray_count` dual-cone generators whose entries lie in
/// `[-max_entry, max_entry]`; redraws until the cone is full-dimensional and pointed.
pub fn ring<R: Rng>(rng: &mut R, d: usize, ray_count: usize, max_entry: i64) -> Arc<ToricRing> {
    loop {
        let rays: Vec<LatticePoint> = (0..ray_count)
            .map(|_| {
                let v: Vec<i64> = (0..d).map(|_| rng.gen_range(-max_entry..=max_entry)).collect();
                LatticePoint::from_i64s(&v)
            })
            .collect();
        if let Ok(r) = ToricRing::from_dual_rays(&rays) {
            return Arc::new(r);
        }
    }
}

/// A random Q-Gorenstein ring (any ring for `d <= 2`, simplicial otherwise
/// unless a non-simplicial draw happens to be Q-Gorenstein).
pub fn q_gorenstein_ring<R: Rng>(rng: &mut R, d: usize, max_entry: i64) -> Arc<ToricRing> {
    loop {
        let count = if d >= 3 && rng.gen_bool(0.3) { d + 1 } else { d };
        let r = ring(rng, d, count, max_entry);
        if r.canonical_shift().is_some() {
            return r;
        }
    }
}

/// Semigroup points whose sigma pairings are all at most `max_pairing`.
pub fn monomials(ring: &ToricRing, max_pairing: i64) -> Vec<LatticePoint> {
    let oracle = OracleRing::of(ring);
    let bound = vec![i128::from(max_pairing); oracle.sigma_rays.len()];
    oracle.bounded_points(&bound).iter().map(|v| to_point(v)).collect()
}

/// A nonzero ideal with between 1 and `max_gens` generators drawn from `pool`.
pub fn ideal<R: Rng>(rng: &mut R, ring: &Arc<ToricRing>, pool: &[LatticePoint], max_gens: usize) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<LatticePoint> = (0..count).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    MonomialIdeal::minimalize(ring, &gens).expect("pool points lie in the semigroup")
}

/// One instance of the two-dimensional subadditivity suite.
pub struct Instance2D {
    pub ring: Arc<ToricRing>,
    pub a: MonomialIdeal,
    pub b: MonomialIdeal,
}

/// Dual-cone ray entries at most 7 in absolute value, at most 4 generators per
/// ideal, generator pairings at most 30.
pub fn instance_2d<R: Rng>(rng: &mut R) -> Instance2D {
    let ring = ring(rng, 2, 2, 7);
    let pool = monomials(&ring, 30);
    let a = ideal(rng, &ring, &pool, 4);
    let b = ideal(rng, &ring, &pool, 4);
    Instance2D { ring, a, b }
}
