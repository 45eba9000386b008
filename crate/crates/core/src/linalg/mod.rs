//! Exact scalars, sparse vectors, canonical subspaces and linear maps.

mod map;
mod scalar;
mod subspace;
mod vector;

pub use map::{dot, LinearMap};
pub use scalar::{Field, Rat, Scalar, DEFAULT_PRIME};
pub use subspace::{rref, Basis, Echelon, SpanBuilder, Subspace};
pub use vector::Vector;
