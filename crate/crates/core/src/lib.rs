//! Exact multiplier ideals of monomial ideals on normal (Q-)Gorenstein toric
//! rings, via Newton polyhedra, together with tooling for testing the
//! subadditivity containment `J(ab) ⊆ J(a)J(b)`.

mod dd;
pub mod error;
pub mod geometry;
pub mod ideal;
pub mod lab;
mod lattice;
mod linalg;
pub mod multiplier;
pub mod point;
pub mod ring;

pub use error::{Error, Result};
pub use geometry::{
    affinely_independent, dual_cone, hull_plus_cone, poly_contains, relint_certificate, ConvexCertificate,
    FacetEvaluation, FacetStatus, Halfspace, MembershipReport, NewtonPolyhedron, PolyCone,
};
pub use ideal::MonomialIdeal;
pub use multiplier::{multiplier_ideal, multiplier_membership, MultiplierMembership, MultiplierResult};
pub use point::{LatticePoint, RatPoint};
pub use ring::{GorensteinData, ToricRing};
