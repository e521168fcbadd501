use thiserror::Error;

use crate::rootdata::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for Dynkin family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("rank {rank} exceeds the configured cap of {cap}")]
    RankCap { rank: usize, cap: usize },

    #[error("relation matrix has an infinite cokernel (free rank {free_rank})")]
    InfiniteCokernel { free_rank: usize },

    #[error("homomorphism is not well defined: generator {generator} of order {order} maps to a nonzero element")]
    IllDefinedHom { generator: usize, order: i64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("element {element:?} does not lie in {what}")]
    NotInSubgroup { element: Vec<i64>, what: &'static str },

    #[error("subgroup name `{name}` is not defined for type {ty}")]
    UnknownSubgroup { name: String, ty: String },

    #[error("group of order {order} exceeds the oracle cap of {cap}")]
    SizeCap { order: u64, cap: u64 },

    #[error("genus {genus} is below 3; pass the low-genus override to proceed")]
    GenusTooLow { genus: u32 },

    #[error("operation requires {expected} mode")]
    WrongMode { expected: &'static str },

    #[error("operation requires a single almost simple factor, got {count}")]
    MultiFactor { count: usize },

    #[error("{0}")]
    Invalid(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
