//! Exact and statistical tools for elements with only negative (or only
//! positive) cycles in the Weyl groups of type B and D.

pub mod asymptotics;
pub mod cli;
pub mod counting;
pub mod error;
pub mod oracle;
pub mod rational;
pub mod sampling;
pub mod signed_perm;

pub use error::{Error, Result};
pub use rational::{ExactRational, Rounding};
pub use signed_perm::{CycleDecomposition, Permutation, Sign, SignVector, SignedPermutation};
