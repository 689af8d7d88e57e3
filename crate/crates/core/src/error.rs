use thiserror::Error;

use crate::point::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("input does not span a full-dimensional cone or polyhedron")]
    NotFullDimensional,
    #[error("cone is not pointed (contains a line)")]
    NotPointed,
    #[error("point is not in the interior of the polyhedron")]
    NotInterior,
    #[error("exponent {0} is not in the semigroup of the ring")]
    NotInSemigroup(LatticePoint),
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("ring is not Q-Gorenstein")]
    NotQGorenstein,
    #[error("operation requires dimension 2, got {0}")]
    NotDimension2(usize),
    #[error("monomial with exponent {0} is not in the multiplier ideal")]
    NotInMultiplierIdeal(LatticePoint),
    #[error("no boundary segment region contains {0} + u0 in its interior")]
    NoDecomposition(LatticePoint),
    #[error("target point is invalid: {0}")]
    InvalidTarget(String),
    #[error("construction recipe invalid: {0}")]
    RecipeInvalid(String),
    #[error("search configuration invalid: {0}")]
    ConfigInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
