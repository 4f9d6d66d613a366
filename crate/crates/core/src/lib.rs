//! Symmetric group actions on the cohomology algebra of the configuration
//! space of `n` points in `R^d`.

pub mod action;
pub mod algebra;
pub mod character;
pub mod check;
pub mod error;
pub mod graded;
pub mod partition;
pub mod recursion;
pub mod report;

pub use error::{Error, Result};
