//! The Huneke–Swanson lifting: from `r ∈ closure(I'+J') \ (closure(I') + closure(J'))`
//! in `R'`, adjoin a direction `Z` and take `I = closure(I') + (Z)`,
//! `J = closure(J') + (Z)`.
//!
//! When `Z` is a new variable this gives `rZ ∈ closure(IJ) \ closure(I)·closure(J)`
//! with `I`, `J` integrally closed. A monomial `Z` of the base ring need not
//! behave that way, so the construction computes each of these facts and
//! reports them in [`ConstructionChecks`] instead of assuming them.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::point::LatticePoint;
use crate::ring::ToricRing;

/// Plain-data form of a recipe, as read from configuration files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeSpec {
    pub base_dual_rays: Vec<LatticePoint>,
    pub i_prime: Vec<LatticePoint>,
    pub j_prime: Vec<LatticePoint>,
    pub r: LatticePoint,
    pub z_exponent: LatticePoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub base_ring: Arc<ToricRing>,
    pub i_prime: MonomialIdeal,
    pub j_prime: MonomialIdeal,
    pub r: LatticePoint,
    /// Exponent of `Z` in the extended lattice (one more coordinate).
    pub z_exponent: LatticePoint,
}

impl ConstructionRecipe {
    pub fn from_spec(spec: &RecipeSpec) -> Result<ConstructionRecipe> {
        let base_ring = Arc::new(ToricRing::from_dual_rays(&spec.base_dual_rays)?);
        let i_prime = MonomialIdeal::minimalize(&base_ring, &spec.i_prime)?;
        let j_prime = MonomialIdeal::minimalize(&base_ring, &spec.j_prime)?;
        Ok(ConstructionRecipe { base_ring, i_prime, j_prime, r: spec.r.clone(), z_exponent: spec.z_exponent.clone() })
    }

    pub fn spec(&self) -> RecipeSpec {
        RecipeSpec {
            base_dual_rays: self.base_ring.dual_rays().to_vec(),
            i_prime: self.i_prime.generators().to_vec(),
            j_prime: self.j_prime.generators().to_vec(),
            r: self.r.clone(),
            z_exponent: self.z_exponent.clone(),
        }
    }

    /// Checks `r ∈ closure(I'+J')`, `r ∉ closure(I') + closure(J')` and the shape of `Z`.
    pub fn validate(&self) -> Result<()> {
        let d = self.base_ring.dim();
        let invalid = |msg: String| Err(Error::RecipeInvalid(msg));
        if self.i_prime.ring() != &self.base_ring || self.j_prime.ring() != &self.base_ring {
            return invalid("I' and J' must live in the base ring".into());
        }
        if self.i_prime.is_zero() || self.j_prime.is_zero() {
            return invalid("I' and J' must be nonzero".into());
        }
        if self.r.dim() != d || !self.base_ring.contains_unchecked(&self.r) {
            return invalid(format!("r = {} is not a monomial of the base ring", self.r));
        }
        if self.z_exponent.dim() != d + 1 {
            return invalid(format!("z exponent must have {} coordinates", d + 1));
        }
        if !self.z_exponent.coords()[d].is_positive() {
            return invalid("z exponent must have positive last coordinate".into());
        }
        let base_part = LatticePoint::new(self.z_exponent.coords()[..d].to_vec());
        if !self.base_ring.contains_unchecked(&base_part) {
            return invalid(format!("z exponent {} is not a monomial", self.z_exponent));
        }
        let sum_closure = self.i_prime.sum(&self.j_prime)?.integral_closure()?;
        if !sum_closure.contains_monomial(&self.r)? {
            return invalid(format!("r = {} is not in closure(I'+J')", self.r));
        }
        let naive = self.i_prime.integral_closure()?.sum(&self.j_prime.integral_closure()?)?;
        if naive.contains_monomial(&self.r)? {
            return invalid(format!("r = {} already lies in closure(I') + closure(J')", self.r));
        }
        Ok(())
    }
}

/// Post-conditions of the lifting, each computed with the closure oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionChecks {
    pub i_integrally_closed: bool,
    pub j_integrally_closed: bool,
    pub rz_in_closure_of_product: bool,
    pub rz_outside_product_of_closures: bool,
}

impl ConstructionChecks {
    pub fn all_hold(&self) -> bool {
        self.i_integrally_closed
            && self.j_integrally_closed
            && self.rz_in_closure_of_product
            && self.rz_outside_product_of_closures
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructedInstance {
    pub ring: Arc<ToricRing>,
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub rz: LatticePoint,
    pub checks: ConstructionChecks,
}

fn lift(p: &LatticePoint) -> LatticePoint {
    p.extended(BigInt::zero())
}

/// Builds `(R, I, J, rZ)` with `σ_R^∨ = σ_{R'}^∨ × ray(e_{d+1})`. Only the
/// recipe itself is validated; the lifted facts are returned in `checks`.
pub fn huneke_swanson_construct(recipe: &ConstructionRecipe) -> Result<ConstructedInstance> {
    recipe.validate()?;
    let d = recipe.base_ring.dim();
    let mut rays: Vec<LatticePoint> = recipe.base_ring.dual_rays().iter().map(lift).collect();
    rays.push(LatticePoint::zero(d).extended(BigInt::one()));
    let ring = Arc::new(ToricRing::from_dual_rays(&rays)?);

    let build = |closed: &MonomialIdeal| -> Result<MonomialIdeal> {
        let mut gens: Vec<LatticePoint> = closed.generators().iter().map(lift).collect();
        gens.push(recipe.z_exponent.clone());
        MonomialIdeal::minimalize(&ring, &gens)
    };
    let i = build(&recipe.i_prime.integral_closure()?)?;
    let j = build(&recipe.j_prime.integral_closure()?)?;
    let rz = &lift(&recipe.r) + &recipe.z_exponent;

    let closure_i = i.integral_closure()?;
    let closure_j = j.integral_closure()?;
    let checks = ConstructionChecks {
        i_integrally_closed: closure_i == i,
        j_integrally_closed: closure_j == j,
        rz_in_closure_of_product: i.product(&j)?.integral_closure()?.contains_monomial(&rz)?,
        rz_outside_product_of_closures: !closure_i.product(&closure_j)?.contains_monomial(&rz)?,
    };
    Ok(ConstructedInstance { ring, i, j, rz, checks })
}
