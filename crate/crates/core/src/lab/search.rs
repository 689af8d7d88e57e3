//! Randomized search for subadditivity failures built by the Huneke–Swanson
//! construction.
//!
//! Candidate `k` draws from a ChaCha stream selected by `k`, so every candidate
//! is reproducible on its own. Explicit recipes from the configuration come
//! first, then random candidates; results are reported in candidate order no
//! matter how many threads evaluate them.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PolyCone;
use crate::ideal::MonomialIdeal;
use crate::lab::construct::{huneke_swanson_construct, ConstructionRecipe, RecipeSpec};
use crate::lab::subadd::{check_subadditivity, SubadditivityVerdict};
use crate::lattice::Region;
use crate::point::LatticePoint;
use crate::ring::ToricRing;

fn default_threads() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub seed: u64,
    /// Dimension `d` of the base ring `R'`; constructed rings have dimension `d + 1`.
    pub base_dim: usize,
    /// Entries of random dual-cone rays are drawn from `[-max_ray_entry, max_ray_entry]`.
    pub max_ray_entry: i64,
    /// Number of generators of `I'` and `J'` is drawn from `1..=max_generators`.
    pub max_generators: usize,
    /// Bound on the sigma pairings of generators and of the base part of `Z`.
    pub max_pairing: i64,
    /// The last coordinate of `Z` is drawn from `1..=max_z_degree`.
    pub max_z_degree: i64,
    /// Total number of candidates evaluated, explicit recipes included.
    pub cap: usize,
    #[serde(default = "default_threads")]
    pub threads: usize,
    #[serde(default)]
    pub recipes: Vec<RecipeSpec>,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::ConfigInvalid(m.to_string()));
        if self.base_dim == 0 {
            return bad("base_dim must be at least 1");
        }
        if self.max_ray_entry < 1 {
            return bad("max_ray_entry must be at least 1");
        }
        if self.max_generators == 0 {
            return bad("max_generators must be at least 1");
        }
        if self.max_pairing < 1 {
            return bad("max_pairing must be at least 1");
        }
        if self.max_z_degree < 1 {
            return bad("max_z_degree must be at least 1");
        }
        if self.threads == 0 {
            return bad("threads must be at least 1");
        }
        if let Some(r) = self.recipes.iter().find(|r| r.r.dim() != self.base_dim) {
            return Err(Error::ConfigInvalid(format!("recipe r = {} does not have base_dim coordinates", r.r)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    /// Candidate index in enumeration order.
    pub index: usize,
    pub recipe: RecipeSpec,
    pub i: Vec<LatticePoint>,
    pub j: Vec<LatticePoint>,
    pub rz: LatticePoint,
    pub verdict: SubadditivityVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub seed: u64,
    pub candidates: usize,
    pub valid_recipes: usize,
    pub findings: Vec<Finding>,
}

pub fn search_counterexamples(config: &SearchConfig) -> Result<SearchOutcome> {
    search_counterexamples_with(config, |_| {})
}

/// As [`search_counterexamples`], calling `on_found` as soon as each failure is
/// confirmed (in completion order, which may differ from the final order).
pub fn search_counterexamples_with<F>(config: &SearchConfig, on_found: F) -> Result<SearchOutcome>
where
    F: Fn(&Finding) + Sync,
{
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::ConfigInvalid(e.to_string()))?;

    let results: Vec<(bool, Option<Finding>)> = pool.install(|| {
        (0..config.cap)
            .into_par_iter()
            .map(|index| {
                let recipe = if let Some(spec) = config.recipes.get(index) {
                    ConstructionRecipe::from_spec(spec).ok()
                } else {
                    random_recipe(config, index)
                };
                let Some(recipe) = recipe else {
                    return (false, None);
                };
                let Ok(built) = huneke_swanson_construct(&recipe) else {
                    return (false, None);
                };
                let finding = match check_subadditivity(&built.i, &built.j) {
                    Ok(verdict) if !verdict.holds => Some(Finding {
                        index,
                        recipe: recipe.spec(),
                        i: built.i.generators().to_vec(),
                        j: built.j.generators().to_vec(),
                        rz: built.rz,
                        verdict,
                    }),
                    _ => None,
                };
                if let Some(f) = &finding {
                    on_found(f);
                }
                (true, finding)
            })
            .collect()
    });

    let valid_recipes = results.iter().filter(|(valid, _)| *valid).count();
    let findings = results.into_iter().filter_map(|(_, f)| f).collect();
    Ok(SearchOutcome { seed: config.seed, candidates: config.cap, valid_recipes, findings })
}

fn candidate_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Lattice points of `σ^∨` whose sigma pairings are all at most `bound`.
fn bounded_monomials(ring: &ToricRing, bound: i64) -> Result<Vec<LatticePoint>> {
    let mut region = Region::new(ring.dim(), Vec::new());
    for n in ring.sigma_rays() {
        region.push_slab(n, &BigInt::zero(), &BigInt::from(bound));
    }
    region.lattice_points()
}

fn random_ring(config: &SearchConfig, rng: &mut ChaCha8Rng) -> Option<ToricRing> {
    let d = config.base_dim;
    for _ in 0..64 {
        let rays: Vec<LatticePoint> = (0..d)
            .map(|_| {
                let v: Vec<i64> = (0..d).map(|_| rng.gen_range(-config.max_ray_entry..=config.max_ray_entry)).collect();
                LatticePoint::from_i64s(&v)
            })
            .collect();
        if PolyCone::new(&rays).is_ok() {
            return ToricRing::from_dual_rays(&rays).ok();
        }
    }
    None
}

/// Draws a base ring and ideals, then picks `r` among the minimal generators of
/// `closure(I'+J')` that avoid `closure(I') + closure(J')`.
fn random_recipe(config: &SearchConfig, index: usize) -> Option<ConstructionRecipe> {
    let mut rng = candidate_rng(config.seed, index);
    let base_ring = Arc::new(random_ring(config, &mut rng)?);
    let monomials = bounded_monomials(&base_ring, config.max_pairing).ok()?;
    let nonzero: Vec<&LatticePoint> = monomials.iter().filter(|m| !m.is_zero()).collect();
    if nonzero.is_empty() {
        return None;
    }
    let draw_ideal = |rng: &mut ChaCha8Rng| {
        let count = rng.gen_range(1..=config.max_generators);
        let gens: Vec<LatticePoint> = (0..count).map(|_| nonzero[rng.gen_range(0..nonzero.len())].clone()).collect();
        MonomialIdeal::minimalize(&base_ring, &gens).ok()
    };
    let i_prime = draw_ideal(&mut rng)?;
    let j_prime = draw_ideal(&mut rng)?;

    let closure_sum = i_prime.sum(&j_prime).ok()?.integral_closure().ok()?;
    let naive = i_prime.integral_closure().ok()?.sum(&j_prime.integral_closure().ok()?).ok()?;
    let gaps: Vec<&LatticePoint> =
        closure_sum.generators().iter().filter(|g| !naive.contains_monomial(g).unwrap_or(true)).collect();
    if gaps.is_empty() {
        return None;
    }
    let r = gaps[rng.gen_range(0..gaps.len())].clone();

    let base_z = monomials[rng.gen_range(0..monomials.len())].clone();
    let z_exponent = base_z.extended(BigInt::from(rng.gen_range(1..=config.max_z_degree)));
    Some(ConstructionRecipe { base_ring, i_prime, j_prime, r, z_exponent })
}
