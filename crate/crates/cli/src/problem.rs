//! Problem files: a ring given by generators of its dual cone, and named ideals.
//!
//! ```json
//! {
//!   "ring": { "dual_cone_rays": [[2, 1, 0], [1, 2, 0], [0, 0, 1]] },
//!   "ideals": { "a": ["x^2y^4", [10, 6, 2]], "b": ["x^12y^7", "x^10y^6z^2"] }
//! }
//! ```
//!
//! Generators are exponent arrays or, for rings of dimension at most 3,
//! monomial strings. An empty generator list is the zero ideal.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use toricmult::{LatticePoint, MonomialIdeal, ToricRing};

use crate::error::CliError;
use crate::monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub ring: RingSpec,
    #[serde(default)]
    pub ideals: BTreeMap<String, Vec<GeneratorSpec>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub dual_cone_rays: Vec<LatticePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Exponent(LatticePoint),
    Monomial(String),
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub ring: Arc<ToricRing>,
    pub ideals: BTreeMap<String, MonomialIdeal>,
}

impl ProblemFile {
    pub fn read(path: &Path) -> Result<ProblemFile, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn build(&self) -> Result<Problem, CliError> {
        let ring = Arc::new(ToricRing::from_dual_rays(&self.ring.dual_cone_rays)?);
        let mut ideals = BTreeMap::new();
        for (name, gens) in &self.ideals {
            if name.contains('*') {
                return Err(CliError::Input(format!("ideal name {name:?} may not contain '*'")));
            }
            let exps = gens
                .iter()
                .map(|g| match g {
                    GeneratorSpec::Exponent(w) => Ok(w.clone()),
                    GeneratorSpec::Monomial(s) => monomial::parse(s, ring.dim()),
                })
                .collect::<Result<Vec<_>, String>>()
                .map_err(|e| CliError::Input(format!("ideal {name}: {e}")))?;
            let ideal =
                MonomialIdeal::minimalize(&ring, &exps).map_err(|e| CliError::Input(format!("ideal {name}: {e}")))?;
            ideals.insert(name.clone(), ideal);
        }
        Ok(Problem { ring, ideals })
    }
}

impl Problem {
    pub fn load(path: &Path) -> Result<Problem, CliError> {
        ProblemFile::read(path)?.build()
    }

    /// Looks up `name`, where `a*b*c` denotes the product of named ideals.
    pub fn ideal(&self, name: &str) -> Result<MonomialIdeal, CliError> {
        let mut out: Option<MonomialIdeal> = None;
        for part in name.split('*').map(str::trim) {
            let ideal = self
                .ideals
                .get(part)
                .ok_or_else(|| CliError::Usage(format!("no ideal named {part:?} in the problem file")))?;
            out = Some(match out {
                None => ideal.clone(),
                Some(acc) => acc.product(ideal)?,
            });
        }
        out.ok_or_else(|| CliError::Usage("empty ideal name".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(json: &str) -> ProblemFile {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn mixed_generator_forms() {
        let p =
            file(r#"{"ring":{"dual_cone_rays":[[2,1,0],[1,2,0],[0,0,1]]},"ideals":{"a":["x^2y^4",[10,6,2]],"b":[]}}"#)
                .build()
                .unwrap();
        assert_eq!(p.ideals["a"].generators(), &[LatticePoint::from([2, 4, 0]), LatticePoint::from([10, 6, 2])]);
        assert!(p.ideals["b"].is_zero());
        assert!(p.ideal("a*b").unwrap().is_zero());
        assert!(matches!(p.ideal("c"), Err(CliError::Usage(_))));
    }

    #[test]
    fn invalid_files() {
        assert!(serde_json::from_str::<ProblemFile>(r#"{"ring":{"rays":[[1,0]]}}"#).is_err());
        let bad_ring = file(r#"{"ring":{"dual_cone_rays":[[1,0],[-1,0]]}}"#);
        assert!(matches!(bad_ring.build(), Err(CliError::Core(_))));
        let outside = file(r#"{"ring":{"dual_cone_rays":[[2,1],[1,2]]},"ideals":{"a":["x"]}}"#);
        assert!(matches!(outside.build(), Err(CliError::Input(_))));
    }
}
