//! Global and partial group actions on algebras, their restrictions and skew group algebras.

mod global;
mod partial;
mod skew;

pub use global::GlobalAction;
pub use partial::{is_minimal_globalization, restrict_global, restrict_global_intersection, Flavor, PartialAction, Restriction};
pub use skew::{action_morphism_skew, check_pa_prp_equivalence, skew_group_algebra, ActionMorphism, SkewAlgebra};
