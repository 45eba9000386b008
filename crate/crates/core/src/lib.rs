//! Exact verification of graded Morita theory for gradings by finite groups: smash products,
//! partial actions and their skew group algebras, Morita contexts, and constructive checks of the
//! theorems relating them. Everything is finite dimensional over ℚ or a prime field.

pub mod action;
pub mod algebra;
pub mod cli;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod linalg;
pub mod morita;
pub mod report;
pub mod smash;
pub mod suite;
pub mod theorems;

pub use error::{Error, Result};
