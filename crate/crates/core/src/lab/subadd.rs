use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::multiplier::{membership_in, multiplier_ideal, shift, MultiplierMembership};
use crate::point::LatticePoint;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubadditivityVerdict {
    pub holds: bool,
    /// Generators of `J(ab)` outside `J(a)J(b)`, sorted.
    pub witnesses: Vec<LatticePoint>,
    /// Membership of each witness in `J(ab)`, with facet values.
    pub certificates: Vec<MultiplierMembership>,
    pub j_ab: Vec<LatticePoint>,
    pub j_a: Vec<LatticePoint>,
    pub j_b: Vec<LatticePoint>,
}

/// Computes `J(ab)`, `J(a)`, `J(b)` and tests every generator of `J(ab)` for
/// membership in `J(a)J(b)`.
pub fn check_subadditivity(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<SubadditivityVerdict> {
    let ab = a.product(b)?;
    let u0 = shift(a)?;
    let j_ab = multiplier_ideal(&ab)?.ideal;
    let j_a = multiplier_ideal(a)?.ideal;
    let j_b = multiplier_ideal(b)?.ideal;
    let product = j_a.product(&j_b)?;

    let newton_ab = ab.newton_polyhedron()?;
    let mut witnesses = Vec::new();
    let mut certificates = Vec::new();
    for g in j_ab.generators() {
        if !product.contains_monomial(g)? {
            certificates.push(membership_in(&newton_ab, &ab, &u0, g)?);
            witnesses.push(g.clone());
        }
    }
    Ok(SubadditivityVerdict {
        holds: witnesses.is_empty(),
        witnesses,
        certificates,
        j_ab: j_ab.generators().to_vec(),
        j_a: j_a.generators().to_vec(),
        j_b: j_b.generators().to_vec(),
    })
}
