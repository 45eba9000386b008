//! Structure-constant algebras, group gradings and graded multipliers.

mod graded;
mod multiplier;
mod structure;

pub use graded::GradedAlgebra;
pub use multiplier::{graded_multipliers, multiplier_facts, multipliers_of_degree, GradedMultiplierAlgebra, Multiplier, MultiplierFacts};
pub use structure::Algebra;
