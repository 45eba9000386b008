//! Graded Morita contexts, context algebras and Morita equivalence of partial actions.

mod action;
mod context;
mod linking;
mod tensor;

pub use action::{
    action_equivalence_to_sge, restrict_action_equivalence, sge_to_canonical_action_equivalence, smash_context,
    validate_action_equivalence, ActionMoritaEquivalence, SgeWitness, SmashContext,
};
pub use context::{AbstractContext, ContextTables, EmbeddedContext, BLOCKS};
pub use linking::{block_multiplier, corner_context, linking_algebra, LinkingAlgebra};
pub use tensor::{compose_contexts, middle_matches, TensorProduct};
