use thiserror::Error;

use crate::algebra::{Polynomial, VarId};

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable {0} has no value at this point")]
    UnassignedVariable(VarId),

    #[error("division is not exact, remainder {remainder}")]
    NonExactDivision { remainder: Polynomial },

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid signature {parts:?}: {reason}")]
    InvalidSignature { parts: Vec<u32>, reason: String },

    #[error("{what} {value} out of range 1..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("boundary violates path conservation: {entering} paths enter, {exiting} exit")]
    Conservation { entering: usize, exiting: usize },

    #[error("cross-weight nullspace has dimension {dimension} (rank {rank} of {equations} equations)")]
    Nullspace {
        dimension: usize,
        rank: usize,
        equations: usize,
    },

    #[error("symbolic mode is limited to n*m <= {limit}, got {rows}x{cols}")]
    SymbolicTooLarge {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    #[error("point mode is limited to at most {limit} columns, got {cols}")]
    ProfileTooWide { cols: usize, limit: usize },

    #[error("weight {what} vanishes")]
    VanishingWeight { what: String },

    #[error("invalid label pair ({0}, {1})")]
    InvalidPair(u32, u32),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
