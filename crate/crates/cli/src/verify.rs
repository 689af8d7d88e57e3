//! End-to-end check of the three-dimensional counterexample.

use std::path::Path;

use serde::{Deserialize, Serialize};
use toricmult::lab::{check_subadditivity, exhaustive_refute, huneke_swanson_construct, reference};
use toricmult::{
    affinely_independent, multiplier_ideal, multiplier_membership, poly_contains, relint_certificate, Halfspace,
    LatticePoint, MonomialIdeal,
};

use crate::error::CliError;
use crate::report::{Check, Note, VerifyPayload};

/// Expected facets `normal · x >= offset` of `N(a)` and `N(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetFixture {
    pub a: Vec<FacetSpec>,
    pub b: Vec<FacetSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetSpec {
    pub normal: LatticePoint,
    pub offset: i64,
}

impl FacetFixture {
    pub fn builtin() -> FacetFixture {
        let spec = |h: &Halfspace| FacetSpec {
            normal: LatticePoint::new(h.normal().to_vec()),
            offset: i64::try_from(h.offset().to_integer()).expect("small offsets"),
        };
        FacetFixture {
            a: reference::facets_a().iter().map(spec).collect(),
            b: reference::facets_b().iter().map(spec).collect(),
        }
    }

    pub fn read(path: &Path) -> Result<FacetFixture, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn normalized(specs: &[FacetSpec]) -> Vec<Halfspace> {
    let mut out: Vec<Halfspace> = specs
        .iter()
        .map(|s| {
            Halfspace::new(s.normal.coords().to_vec(), num_rational::BigRational::from_integer(s.offset.into()), false)
        })
        .collect();
    out.sort();
    out
}

fn compare_facets(expected: &[FacetSpec], computed: &[Halfspace]) -> (bool, String) {
    let expected = normalized(expected);
    let missing: Vec<String> = expected.iter().filter(|h| !computed.contains(h)).map(ToString::to_string).collect();
    let extra: Vec<String> = computed.iter().filter(|h| !expected.contains(h)).map(ToString::to_string).collect();
    if missing.is_empty() && extra.is_empty() {
        let shown: Vec<String> = computed.iter().map(ToString::to_string).collect();
        (true, shown.join(", "))
    } else {
        (
            false,
            format!(
                "facet mismatch: expected but not computed [{}]; computed but not expected [{}]",
                missing.join(", "),
                extra.join(", ")
            ),
        )
    }
}

struct Checklist {
    checks: Vec<Check>,
}

impl Checklist {
    fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

pub fn verify_paper(expected: &FacetFixture) -> Result<VerifyPayload, CliError> {
    let mut list = Checklist { checks: Vec::new() };
    let ring = reference::ring();
    let sigma: Vec<String> = ring.sigma_rays().iter().map(ToString::to_string).collect();
    let sigma_ok = ring.sigma_rays()
        == [LatticePoint::from([-1, 2, 0]), LatticePoint::from([0, 0, 1]), LatticePoint::from([2, -1, 0])];
    list.add("ring", sigma_ok, format!("sigma rays {}", sigma.join(", ")));

    let u0 = ring.gorenstein_point().cloned();
    list.add(
        "gorenstein_point",
        u0 == Some(reference::u0()),
        u0.map_or("ring is not Gorenstein".to_string(), |u| format!("u0 = {u}")),
    );

    let a = reference::ideal_a();
    let b = reference::ideal_b();
    let na = a.newton_polyhedron()?;
    let nb = b.newton_polyhedron()?;
    let (ok, detail) = compare_facets(&expected.a, na.facets());
    list.add("facets_a", ok, detail);
    let (ok, detail) = compare_facets(&expected.b, nb.facets());
    list.add("facets_b", ok, detail);

    let ab = a.product(&b)?;
    let gens: Vec<String> = ab.generators().iter().map(ToString::to_string).collect();
    list.add("product_generators", ab.generators() == reference::product_generators(), gens.join(", "));

    let nab = ab.newton_polyhedron()?;
    let v = reference::target().to_rat();
    let fixture_cert = reference::interior_certificate();
    let independent = affinely_independent(&fixture_cert.points)?;
    let valid = fixture_cert.validate(&nab, &v);
    list.add(
        "relint_certificate",
        independent && valid.is_ok(),
        match valid {
            Ok(()) => "v = 5/16 v1 + 1/16 v2 + 1/8 v3 + 1/2 v4 with v1..v4 affinely independent in N(ab)".to_string(),
            Err(e) => e,
        },
    );
    let built_cert = relint_certificate(&nab, &v).map_err(CliError::from).and_then(|c| {
        c.validate(&nab, &v).map_err(CliError::Input)?;
        Ok(c)
    });
    list.add(
        "constructed_certificate",
        built_cert.is_ok(),
        match &built_cert {
            Ok(c) => format!("{} points around v validate", c.points.len()),
            Err(e) => e.to_string(),
        },
    );

    let w = reference::witness();
    let m = multiplier_membership(&ab, &w)?;
    list.add("witness_in_j_ab", m.member, format!("{w} + u0 strictly inside every facet of N(ab)"));

    let ja = multiplier_ideal(&a)?.ideal;
    let jb = multiplier_ideal(&b)?.ideal;
    let in_product = ja.product(&jb)?.contains_monomial(&w)?;
    list.add("witness_not_in_j_a_j_b", !in_product, format!("{w} is not in J(a)J(b)"));

    let verdict = check_subadditivity(&a, &b)?;
    list.add(
        "subadditivity_fails",
        !verdict.holds && verdict.witnesses.contains(&w),
        format!("{} witness(es)", verdict.witnesses.len()),
    );

    let refutation = exhaustive_refute(&v, &a, &b)?;
    list.add(
        "exhaustive_refutation",
        refutation.refuted(),
        format!(
            "{} candidates scanned, {} splittings",
            refutation.scanned_count,
            refutation.decompositions_found.len()
        ),
    );

    let mut excluded = true;
    let mut reasons = Vec::new();
    for (point, against_b) in reference::naive_split_exclusions() {
        let (poly, label) = if against_b { (&nb, "N(b)") } else { (&na, "N(a)") };
        let report = poly_contains(poly, &point.to_rat(), true)?;
        excluded &= !report.inside;
        let facets: Vec<String> =
            report.obstructions().map(|e| format!("{} evaluates to {}", e.facet, e.value)).collect();
        reasons.push(format!("{point} not in relint {label} ({})", facets.join("; ")));
    }
    list.add("naive_split_exclusions", excluded, reasons.join(", "));

    let built = huneke_swanson_construct(&reference::recipe())?;
    let rebuilt = built.i == a && built.j == b && built.rz == reference::target();
    list.add(
        "huneke_swanson_reconstruction",
        rebuilt && built.checks.rz_in_closure_of_product,
        format!("I = a, J = b, rZ = {} in closure(ab)", built.rz),
    );

    let notes = vec![
        Note {
            name: "lifted_ideals_integrally_closed".into(),
            value: built.checks.i_integrally_closed && built.checks.j_integrally_closed,
            detail: closure_gap(&built.i, "a")
                .and_then(|x| closure_gap(&built.j, "b").map(|y| format!("{x}; {y}")))
                .unwrap_or_default(),
        },
        Note {
            name: "rz_outside_closure_a_closure_b".into(),
            value: built.checks.rz_outside_product_of_closures,
            detail: "Z = x^10y^6z^2 is not a new variable, so the lifting argument does not apply".into(),
        },
    ];

    let first_failure = list.checks.iter().find(|c| !c.passed).map(|c| c.name.clone());
    Ok(VerifyPayload { all_passed: first_failure.is_none(), first_failure, checks: list.checks, notes })
}

fn closure_gap(i: &MonomialIdeal, name: &str) -> Option<String> {
    let c = i.integral_closure().ok()?;
    let extra: Vec<String> =
        c.generators().iter().filter(|g| !i.generators().contains(g)).map(ToString::to_string).collect();
    Some(if extra.is_empty() {
        format!("{name} is closed")
    } else {
        format!("closure({name}) adds {}", extra.join(", "))
    })
}
