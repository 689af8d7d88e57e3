use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toricmult::lab::{
    check_subadditivity, decompose_2d, exhaustive_refute, huneke_swanson_construct, reference, search_counterexamples,
    search_counterexamples_with, SearchConfig,
};
use toricmult::{multiplier_ideal, poly_contains, FacetStatus, Halfspace, LatticePoint, MonomialIdeal, ToricRing};
use toricmult_oracle::{self as oracle, gen, to_vector, OracleRing};

#[test]
fn example_fails_subadditivity() {
    let verdict = check_subadditivity(&reference::ideal_a(), &reference::ideal_b()).unwrap();
    assert!(!verdict.holds);
    assert!(verdict.witnesses.contains(&reference::witness()));
    assert_eq!(verdict.witnesses.len(), verdict.certificates.len());
    assert!(verdict.certificates.iter().all(|c| c.member));

    let ring = reference::ring();
    let ja = MonomialIdeal::minimalize(&ring, &verdict.j_a).unwrap();
    let jb = MonomialIdeal::minimalize(&ring, &verdict.j_b).unwrap();
    assert!(!ja.product(&jb).unwrap().contains_monomial(&reference::witness()).unwrap());
}

#[test]
fn verdict_is_stable_under_generator_order() {
    let ring = reference::ring();
    let a = MonomialIdeal::from_i64s(&ring, &[&[10, 6, 2], &[2, 4, 0]]).unwrap();
    let b = MonomialIdeal::from_i64s(&ring, &[&[10, 6, 2], &[12, 7, 0]]).unwrap();
    let expected = check_subadditivity(&reference::ideal_a(), &reference::ideal_b()).unwrap();
    assert_eq!(check_subadditivity(&a, &b).unwrap(), expected);
    assert_eq!(check_subadditivity(&b, &a).unwrap().witnesses, expected.witnesses);
}

#[test]
fn example_admits_no_split() {
    let report =
        exhaustive_refute(&reference::target().to_rat(), &reference::ideal_a(), &reference::ideal_b()).unwrap();
    assert!(report.refuted());
    assert!(report.scanned_count > 0);
    assert_eq!(report.search_bounds.len(), 3);
}

#[test]
fn naive_splits_fail_on_named_facets() {
    let na = reference::ideal_a().newton_polyhedron().unwrap();
    let nb = reference::ideal_b().newton_polyhedron().unwrap();
    let expected = [
        (Halfspace::from_i64s(&[-1, 2, 0], 2), FacetStatus::Violated),
        (Halfspace::from_i64s(&[2, -1, 0], 14), FacetStatus::Violated),
        (Halfspace::from_i64s(&[-1, 4, 0], 14), FacetStatus::Tight),
        (Halfspace::from_i64s(&[-1, 2, 2], 6), FacetStatus::Violated),
    ];
    for ((point, against_b), (facet, status)) in reference::naive_split_exclusions().into_iter().zip(expected) {
        let poly = if against_b { &nb } else { &na };
        let report = poly_contains(poly, &point.to_rat(), true).unwrap();
        assert!(!report.inside, "{point}");
        assert!(
            report.obstructions().any(|e| e.facet == facet && e.status == status),
            "{point}: {:?}",
            report.obstructions().collect::<Vec<_>>()
        );
    }
}

#[test]
fn reference_recipe_rebuilds_the_example() {
    let built = huneke_swanson_construct(&reference::recipe()).unwrap();
    assert_eq!(built.i, reference::ideal_a());
    assert_eq!(built.j, reference::ideal_b());
    assert_eq!(built.rz, reference::target());
    assert!(built.checks.rz_in_closure_of_product);
}

#[test]
fn orthant_instances_are_subadditive() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ring = Arc::new(ToricRing::orthant(3));
    let pool = gen::monomials(&ring, 3);
    for _ in 0..6 {
        let a = gen::ideal(&mut rng, &ring, &pool, 2);
        let b = gen::ideal(&mut rng, &ring, &pool, 2);
        assert!(check_subadditivity(&a, &b).unwrap().holds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn two_dimensional_instances_decompose(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = gen::instance_2d(&mut rng);
        let verdict = check_subadditivity(&inst.a, &inst.b).unwrap();
        prop_assert!(verdict.holds);
        let ab = inst.a.product(&inst.b).unwrap();
        let u0 = inst.ring.canonical_shift().unwrap();
        for p in multiplier_ideal(&ab).unwrap().ideal.generators() {
            let dec = decompose_2d(p, &inst.a, &inst.b).unwrap();
            prop_assert_eq!(dec.validate(&inst.a, &inst.b), Ok(()));
            let report = exhaustive_refute(&(&p.to_rat() + &u0), &inst.a, &inst.b).unwrap();
            prop_assert!(!report.refuted());
        }
    }

    #[test]
    fn subadditivity_matches_oracle_in_2d(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = gen::ring(&mut rng, 2, 2, 4);
        let pool = gen::monomials(&ring, 10);
        let a = gen::ideal(&mut rng, &ring, &pool, 3);
        let b = gen::ideal(&mut rng, &ring, &pool, 3);
        let o = OracleRing::of(&ring);
        let ga = oracle::generators(&a);
        let gb = oracle::generators(&b);
        let jab = oracle::multiplier(&o, &oracle::product(&o, &ga, &gb)).unwrap();
        let jajb = oracle::product(&o, &oracle::multiplier(&o, &ga).unwrap(), &oracle::multiplier(&o, &gb).unwrap());
        prop_assert!(jab.iter().all(|w| oracle::contains(&o, &jajb, w)));
        let verdict = check_subadditivity(&a, &b).unwrap();
        prop_assert_eq!(verdict.j_ab.iter().map(to_vector).collect::<Vec<_>>(), jab);
    }
}

fn search_config(threads: usize) -> SearchConfig {
    SearchConfig {
        seed: 2024,
        base_dim: 2,
        max_ray_entry: 3,
        max_generators: 2,
        max_pairing: 6,
        max_z_degree: 2,
        cap: 12,
        threads,
        recipes: vec![reference::recipe().spec()],
    }
}

#[test]
fn search_is_deterministic_across_threads() {
    let one = search_counterexamples(&search_config(1)).unwrap();
    let four = search_counterexamples(&search_config(4)).unwrap();
    assert_eq!(one, four);
    assert_eq!(one.findings[0].index, 0);
    assert!(one.findings[0].verdict.witnesses.contains(&reference::witness()));
    assert!(one.findings.windows(2).all(|w| w[0].index < w[1].index));
}

#[test]
fn search_streams_each_finding() {
    let seen = std::sync::Mutex::new(Vec::new());
    let out = search_counterexamples_with(&search_config(2), |f| seen.lock().unwrap().push(f.index)).unwrap();
    let mut seen = seen.into_inner().unwrap();
    seen.sort();
    assert_eq!(seen, out.findings.iter().map(|f| f.index).collect::<Vec<_>>());
}

#[test]
fn search_over_line_bases_finds_nothing() {
    let config = SearchConfig { base_dim: 1, recipes: Vec::new(), cap: 16, ..search_config(2) };
    let out = search_counterexamples(&config).unwrap();
    assert!(out.findings.is_empty());
    let empty = SearchConfig { cap: 0, ..search_config(1) };
    assert!(search_counterexamples(&empty).unwrap().findings.is_empty());
}

#[test]
fn decompose_rejects_bad_input() {
    let a = reference::ideal_a();
    assert!(decompose_2d(&reference::witness(), &a, &a).is_err());
    let ring = Arc::new(ToricRing::orthant(2));
    let x = MonomialIdeal::from_i64s(&ring, &[&[1, 0]]).unwrap();
    assert!(decompose_2d(&LatticePoint::from([0, 0]), &x, &x).is_err());
}
