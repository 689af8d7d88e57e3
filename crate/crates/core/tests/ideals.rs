use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toricmult::lab::reference;
use toricmult::{Error, LatticePoint, MonomialIdeal, ToricRing};
use toricmult_oracle::{self as oracle, gen, to_vector, OracleRing};

fn plane_ring() -> Arc<ToricRing> {
    Arc::new(ToricRing::from_i64s(&[&[2, 1], &[1, 2]]).unwrap())
}

fn pts(v: &[&[i64]]) -> Vec<LatticePoint> {
    v.iter().map(|p| LatticePoint::from_i64s(p)).collect()
}

#[test]
fn product_of_the_example_ideals() {
    let ab = reference::ideal_a().product(&reference::ideal_b()).unwrap();
    assert_eq!(ab.generators(), reference::product_generators().as_slice());
    assert_eq!(ab.generators(), pts(&[&[12, 10, 2], &[14, 11, 0], &[20, 12, 4], &[22, 13, 2]]).as_slice());
    let closure = ab.integral_closure().unwrap();
    assert!(closure.contains_monomial(&reference::target()).unwrap());
}

#[test]
fn sum_of_principal_plane_ideals() {
    let ring = plane_ring();
    let i = MonomialIdeal::from_i64s(&ring, &[&[2, 4]]).unwrap();
    let j = MonomialIdeal::from_i64s(&ring, &[&[12, 7]]).unwrap();
    assert_eq!(i.sum(&j).unwrap().generators(), pts(&[&[2, 4], &[12, 7]]).as_slice());
}

#[test]
fn remark_closure_facts() {
    let ring = plane_ring();
    let i = MonomialIdeal::from_i64s(&ring, &[&[2, 4]]).unwrap();
    let j = MonomialIdeal::from_i64s(&ring, &[&[12, 7]]).unwrap();
    let r = LatticePoint::from([8, 6]);
    assert!(i.sum(&j).unwrap().integral_closure().unwrap().contains_monomial(&r).unwrap());
    assert_eq!(i.integral_closure().unwrap(), i);
    assert_eq!(j.integral_closure().unwrap(), j);
    let naive = i.integral_closure().unwrap().sum(&j.integral_closure().unwrap()).unwrap();
    assert!(!naive.contains_monomial(&r).unwrap());

    // oracle: (8,6) is the midpoint of (2,4)–(12,7) plus (1, 1/2) ∈ σ^∨
    let o = OracleRing::of(&ring);
    let c = oracle::closure(&o, &[vec![2, 4], vec![12, 7]]);
    assert!(oracle::contains(&o, &c, &[8, 6]));
    assert!(!oracle::contains(&o, &[vec![2, 4], vec![12, 7]], &[8, 6]));
}

#[test]
fn closure_of_unit_and_zero() {
    let ring = plane_ring();
    assert!(MonomialIdeal::unit(&ring).integral_closure().unwrap().is_unit());
    assert_eq!(MonomialIdeal::zero(&ring).integral_closure().unwrap_err(), Error::ZeroIdeal);
}

#[test]
fn minimalize_examples() {
    let ring = reference::ring();
    assert_eq!(
        MonomialIdeal::from_i64s(&ring, &[&[2, 4, 0], &[4, 5, 0]]).unwrap().generators(),
        pts(&[&[2, 4, 0]]).as_slice()
    );
    assert!(MonomialIdeal::from_i64s(&ring, &[&[0, 0, 0], &[5, 5, 5]]).unwrap().is_unit());
    assert_eq!(reference::ideal_a().generators(), pts(&[&[2, 4, 0], &[10, 6, 2]]).as_slice());
    assert_eq!(
        MonomialIdeal::from_i64s(&ring, &[&[1, 0, 0]]).unwrap_err(),
        Error::NotInSemigroup(LatticePoint::from([1, 0, 0]))
    );
}

fn instance(seed: u64, d: usize, pairing: i64) -> (Arc<ToricRing>, Vec<LatticePoint>, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = if d == 3 && seed.is_multiple_of(3) { 4 } else { d };
    let ring = gen::ring(&mut rng, d, count, 3);
    let pool = gen::monomials(&ring, pairing);
    (ring, pool, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_matches_brute_force(seed in any::<u64>(), d in 1usize..=3) {
        let (ring, pool, mut rng) = instance(seed, d, if d == 3 { 6 } else { 12 });
        let ideal = gen::ideal(&mut rng, &ring, &pool, 4);
        let ours: Vec<Vec<i128>> = ideal.integral_closure().unwrap().generators().iter().map(to_vector).collect();
        let o = OracleRing::of(&ring);
        prop_assert_eq!(ours, oracle::closure(&o, &oracle::generators(&ideal)));
    }

    #[test]
    fn closure_is_a_closure_operator(seed in any::<u64>(), d in 2usize..=3) {
        let (ring, pool, mut rng) = instance(seed, d, 6);
        let a = gen::ideal(&mut rng, &ring, &pool, 3);
        let extra = gen::ideal(&mut rng, &ring, &pool, 2);
        let b = a.sum(&extra).unwrap();
        let ca = a.integral_closure().unwrap();
        let cb = b.integral_closure().unwrap();
        prop_assert!(a.is_subset_of(&ca).unwrap());
        prop_assert!(ca.is_subset_of(&cb).unwrap());
        prop_assert_eq!(ca.integral_closure().unwrap(), ca);
    }

    #[test]
    fn membership_matches_brute_force(seed in any::<u64>(), d in 2usize..=3) {
        let (ring, pool, mut rng) = instance(seed, d, if d == 3 { 8 } else { 20 });
        let ideal = gen::ideal(&mut rng, &ring, &pool, 4);
        let o = OracleRing::of(&ring);
        let gens = oracle::generators(&ideal);
        for w in pool.iter().step_by(3) {
            prop_assert_eq!(ideal.contains_monomial(w).unwrap(), oracle::contains(&o, &gens, &to_vector(w)));
        }
    }

    #[test]
    fn products_commute_and_associate(seed in any::<u64>(), d in 2usize..=3) {
        let (ring, pool, mut rng) = instance(seed, d, 6);
        let a = gen::ideal(&mut rng, &ring, &pool, 3);
        let b = gen::ideal(&mut rng, &ring, &pool, 3);
        let c = gen::ideal(&mut rng, &ring, &pool, 3);
        prop_assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
        prop_assert_eq!(
            a.product(&b).unwrap().product(&c).unwrap(),
            a.product(&b.product(&c).unwrap()).unwrap()
        );
        let o = OracleRing::of(&ring);
        let ours: Vec<Vec<i128>> = a.product(&b).unwrap().generators().iter().map(to_vector).collect();
        prop_assert_eq!(ours, oracle::product(&o, &oracle::generators(&a), &oracle::generators(&b)));
    }

    #[test]
    fn generators_form_a_sorted_antichain(seed in any::<u64>(), d in 2usize..=3) {
        let (ring, pool, mut rng) = instance(seed, d, 8);
        let a = gen::ideal(&mut rng, &ring, &pool, 6);
        let g = a.generators();
        prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
        let o = OracleRing::of(&ring);
        prop_assert_eq!(g.iter().map(to_vector).collect::<Vec<_>>(), oracle::minimalize(&o, &oracle::generators(&a)));
    }
}
