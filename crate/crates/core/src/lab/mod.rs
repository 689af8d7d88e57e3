//! Subadditivity experiments: checking `J(ab) ⊆ J(a)J(b)`, the constructive
//! two-dimensional decomposition, exhaustive refutation of a decomposition, and
//! the Huneke–Swanson construction with a randomized search around it.

mod construct;
mod decompose;
pub mod reference;
mod refute;
mod search;
mod subadd;

pub use construct::{
    huneke_swanson_construct, ConstructedInstance, ConstructionChecks, ConstructionRecipe, RecipeSpec,
};
pub use decompose::{decompose_2d, Decomposition2D, Side};
pub use refute::{exhaustive_refute, Decomposition, PairingBound, RefutationReport};
pub use search::{search_counterexamples, search_counterexamples_with, Finding, SearchConfig, SearchOutcome};
pub use subadd::{check_subadditivity, SubadditivityVerdict};
