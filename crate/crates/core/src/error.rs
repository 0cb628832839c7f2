use thiserror::Error;

use crate::subset::Subset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ground-set size {n} is outside 1..={max}")]
    InvalidGroundSet { n: usize, max: usize },

    #[error("expected {expected} values for the subset lattice, found {found}")]
    WrongLength { expected: usize, found: usize },

    #[error("value at mask {mask} is not finite")]
    NonFinite { mask: usize },

    #[error("not a game: value on the empty set is {value}, expected 0")]
    NotAGame { value: f64 },

    #[error("not monotone: v({lower_set}) = {lower} > v({upper_set}) = {upper}")]
    NotMonotone {
        lower_set: Subset,
        upper_set: Subset,
        lower: f64,
        upper: f64,
    },

    #[error("unanimity game requires a nonempty subset")]
    EmptySubset,

    #[error("subset {subset} is not contained in a ground set of size {n}")]
    SubsetOutOfRange { subset: Subset, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ground-set size {n} exceeds the limit {max} for this routine")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("{family} is only defined for n = {required}, got n = {n}")]
    UnsupportedGroundSet {
        family: &'static str,
        required: usize,
        n: usize,
    },

    #[error("coordinate {index} is negative ({value}); the capacity integral is defined on nonnegative points")]
    NegativeCoordinate { index: usize, value: f64 },

    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
