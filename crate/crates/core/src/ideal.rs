//! Monomial ideals of a normal toric ring, stored by minimal generator exponents.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{hull_plus_cone, NewtonPolyhedron};
use crate::lattice::minimal_lattice_points;
use crate::point::{check_dim, LatticePoint};
use crate::ring::ToricRing;

/// A monomial ideal: an antichain of exponents under `g <= g'` iff `g' - g ∈ σ^∨`.
///
/// The empty generator list is the zero ideal; `{0}` is the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<ToricRing>,
    gens: Vec<LatticePoint>,
}

impl MonomialIdeal {
    /// Reduces `raw` to its minimal generators (sorted lexicographically).
    pub fn minimalize(ring: &Arc<ToricRing>, raw: &[LatticePoint]) -> Result<MonomialIdeal> {
        for w in raw {
            if !ring.semigroup_contains(w)? {
                return Err(Error::NotInSemigroup(w.clone()));
            }
        }
        Ok(Self::minimalize_unchecked(ring, raw.to_vec()))
    }

    pub(crate) fn minimalize_unchecked(ring: &Arc<ToricRing>, mut raw: Vec<LatticePoint>) -> MonomialIdeal {
        raw.sort();
        raw.dedup();
        let gens: Vec<LatticePoint> =
            raw.iter().filter(|w| !raw.iter().any(|g| g != *w && ring.divides(g, w))).cloned().collect();
        MonomialIdeal { ring: Arc::clone(ring), gens }
    }

    pub fn from_i64s(ring: &Arc<ToricRing>, raw: &[&[i64]]) -> Result<MonomialIdeal> {
        let pts: Vec<LatticePoint> = raw.iter().map(|g| LatticePoint::from_i64s(g)).collect();
        Self::minimalize(ring, &pts)
    }

    pub fn zero(ring: &Arc<ToricRing>) -> MonomialIdeal {
        MonomialIdeal { ring: Arc::clone(ring), gens: Vec::new() }
    }

    pub fn unit(ring: &Arc<ToricRing>) -> MonomialIdeal {
        MonomialIdeal { ring: Arc::clone(ring), gens: vec![LatticePoint::zero(ring.dim())] }
    }

    pub fn ring(&self) -> &Arc<ToricRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let sums: Vec<LatticePoint> = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a + b)).collect();
        Ok(Self::minimalize_unchecked(&self.ring, sums))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let union: Vec<LatticePoint> = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::minimalize_unchecked(&self.ring, union))
    }

    /// `x^w ∈ I` iff `w - g ∈ σ^∨` for some generator `g`.
    pub fn contains_monomial(&self, w: &LatticePoint) -> Result<bool> {
        check_dim(self.ring.dim(), w.dim())?;
        Ok(self.gens.iter().any(|g| self.ring.divides(g, w)))
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens.iter().all(|g| other.gens.iter().any(|h| self.ring.divides(h, g))))
    }

    /// `conv(gens) + σ^∨`.
    pub fn newton_polyhedron(&self) -> Result<NewtonPolyhedron> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        hull_plus_cone(&self.gens, self.ring.dual_cone())
    }

    /// The monomials whose exponents lie in the Newton polyhedron.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Ok(self.clone());
        }
        let newton = self.newton_polyhedron()?;
        let gens = minimal_lattice_points(self.ring.dual_rays(), self.ring.sigma_rays(), newton.facets())?;
        Ok(MonomialIdeal { ring: Arc::clone(&self.ring), gens })
    }
}
