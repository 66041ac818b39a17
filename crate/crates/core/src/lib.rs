//! Exact six-vertex model toolkit: partition functions over polynomial
//! rings, Yang-Baxter cross weights, and the switch operators that move
//! boundary paths between adjacent rows and columns.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod partition;
pub mod schur;
pub mod switchop;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
