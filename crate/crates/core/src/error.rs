use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("type {family}{rank} is not a valid Cartan type")]
    InadmissibleType { family: Family, rank: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not minuscule")]
    NotMinuscule(Vec<i32>),

    #[error("weight {0:?} is not in the weight lattice")]
    WeightNotFound(Vec<i32>),

    #[error("element set is not an order ideal: {0} is present but an element below it is missing")]
    NotAnIdeal(usize),

    #[error("sequence is not a linear extension of the ideal")]
    NotALinearExtension,

    #[error("heap with {0} elements exceeds the {max} element capacity", max = crate::bitset::CAPACITY)]
    HeapTooLarge(usize),

    #[error("rank {rank} exceeds the cap {cap} for family {family}")]
    RankCapExceeded { family: Family, rank: usize, cap: usize },

    #[error("malformed heap export: {0}")]
    MalformedExport(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
