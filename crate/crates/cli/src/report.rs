//! Reports emitted by every command. The JSON form has a fixed key order and
//! parses back to the same value; rationals are `"p/q"` strings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use toricmult::lab::{Finding, RefutationReport};
use toricmult::{FacetEvaluation, Halfspace, LatticePoint, MultiplierMembership, RatPoint};

use crate::monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub echo: Echo,
    pub exit_code: i32,
    pub result: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

/// The arguments that shaped the result.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Echo {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<RatPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect_facets: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Newton { ideals: Vec<NewtonEntry> },
    Multiplier { u0: RatPoint, ideals: Vec<MultiplierEntry> },
    Closure { ideals: Vec<ClosureEntry> },
    Subadd(SubaddPayload),
    Refute(RefutePayload),
    VerifyPaper(VerifyPayload),
    Search(SearchPayload),
    Error { message: String },
}

/// An exponent with its monomial string when the dimension allows one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub exponent: LatticePoint,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
}

impl Monomial {
    pub fn of(w: &LatticePoint) -> Monomial {
        Monomial { exponent: w.clone(), monomial: monomial::render(w) }
    }

    pub fn list(ws: &[LatticePoint]) -> Vec<Monomial> {
        ws.iter().map(Monomial::of).collect()
    }

    fn label(&self) -> String {
        self.monomial.clone().unwrap_or_else(|| self.exponent.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonEntry {
    pub name: String,
    pub generators: Vec<Monomial>,
    pub vertices: Vec<Monomial>,
    pub facets: Vec<Halfspace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCertificate {
    pub generator: Monomial,
    pub evaluations: Vec<FacetEvaluation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierEntry {
    pub name: String,
    pub generators: Vec<Monomial>,
    pub certificates: Vec<GeneratorCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureEntry {
    pub name: String,
    pub generators: Vec<Monomial>,
    pub closure: Vec<Monomial>,
    pub integrally_closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubaddPayload {
    pub a: String,
    pub b: String,
    pub holds: bool,
    pub witnesses: Vec<Monomial>,
    pub certificates: Vec<MultiplierMembership>,
    pub j_ab: Vec<Monomial>,
    pub j_a: Vec<Monomial>,
    pub j_b: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutePayload {
    pub a: String,
    pub b: String,
    pub refuted: bool,
    pub report: RefutationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A computed fact reported for information; it does not affect the exit code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Note {
    pub name: String,
    pub value: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub all_passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    pub checks: Vec<Check>,
    pub notes: Vec<Note>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchPayload {
    pub seed: u64,
    pub candidates: usize,
    pub valid_recipes: usize,
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        match &self.result {
            Payload::Newton { ideals } => {
                for e in ideals {
                    let _ = writeln!(o, "N({}) = conv{{{}}} + dual cone", e.name, labels(&e.generators));
                    let _ = writeln!(o, "  vertices: {}", labels(&e.vertices));
                    for f in &e.facets {
                        let _ = writeln!(o, "  {f}");
                    }
                }
            }
            Payload::Multiplier { u0, ideals } => {
                let _ = writeln!(o, "u0 = {u0}");
                for e in ideals {
                    let _ = writeln!(o, "J({}) = <{}>", e.name, labels(&e.generators));
                }
            }
            Payload::Closure { ideals } => {
                for e in ideals {
                    let closed = if e.integrally_closed { " (integrally closed)" } else { "" };
                    let _ = writeln!(o, "closure({}) = <{}>{closed}", e.name, labels(&e.closure));
                }
            }
            Payload::Subadd(s) => {
                let _ = writeln!(o, "J({a}{b}) = <{}>", labels(&s.j_ab), a = s.a, b = s.b);
                let _ = writeln!(o, "J({}) = <{}>", s.a, labels(&s.j_a));
                let _ = writeln!(o, "J({}) = <{}>", s.b, labels(&s.j_b));
                if s.holds {
                    let _ =
                        writeln!(o, "subadditivity holds: J({a}{b}) is contained in J({a})J({b})", a = s.a, b = s.b);
                } else {
                    let _ = writeln!(
                        o,
                        "subadditivity FAILS; generators of J({}{}) outside J({})J({}):",
                        s.a, s.b, s.a, s.b
                    );
                    for (w, c) in s.witnesses.iter().zip(&s.certificates) {
                        let _ = writeln!(o, "  {}", w.label());
                        for e in &c.report.evaluations {
                            let _ = writeln!(o, "    {} at w + u0: {} ({:?})", e.facet, e.value, e.status);
                        }
                    }
                }
            }
            Payload::Refute(r) => {
                let rep = &r.report;
                let _ = writeln!(o, "target v = {}, u0 = {}", rep.target, rep.u0);
                for b in &rep.search_bounds {
                    let _ = writeln!(o, "  {} <= <alpha', {}> <= {}", b.lo, b.sigma_ray, b.hi);
                }
                let _ = writeln!(o, "scanned {} candidates", rep.scanned_count);
                if r.refuted {
                    let _ = writeln!(o, "no splitting v = alpha' + beta exists");
                } else {
                    for d in &rep.decompositions_found {
                        let _ = writeln!(o, "  alpha' = {}, beta = {}", d.alpha_shifted, d.beta);
                    }
                }
            }
            Payload::VerifyPaper(v) => {
                for c in &v.checks {
                    let _ = writeln!(o, "[{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
                }
                for n in &v.notes {
                    let _ = writeln!(o, "[note] {} = {}: {}", n.name, n.value, n.detail);
                }
                match &v.first_failure {
                    None => {
                        let _ = writeln!(o, "all checks passed");
                    }
                    Some(name) => {
                        let _ = writeln!(o, "verification FAILED at {name}");
                    }
                }
            }
            Payload::Search(s) => {
                let _ = writeln!(
                    o,
                    "seed {}: {} candidates, {} valid recipes, {} counterexamples",
                    s.seed,
                    s.candidates,
                    s.valid_recipes,
                    s.findings.len()
                );
                for f in &s.findings {
                    let _ = writeln!(o, "  {}", finding_line(f));
                }
            }
            Payload::Error { message } => {
                let _ = writeln!(o, "error: {message}");
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(o, "time: {ms} ms");
        }
        out
    }
}

pub fn finding_line(f: &Finding) -> String {
    let witnesses: Vec<String> = f.verdict.witnesses.iter().map(|w| Monomial::of(w).label()).collect();
    format!("candidate {}: rZ = {}, witnesses {}", f.index, Monomial::of(&f.rz).label(), witnesses.join(", "))
}

fn labels(ms: &[Monomial]) -> String {
    ms.iter().map(Monomial::label).collect::<Vec<_>>().join(", ")
}
