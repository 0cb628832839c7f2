//! Set functions on finite ground sets, the signed Choquet integral and the
//! Lovász extension, with executable checks of their characterizing axioms.
//!
//! ```
//! use choquet_core::{choquet, unanimity_game, Point, Subset};
//!
//! let v = unanimity_game(3, "1,3".parse::<Subset>().unwrap()).unwrap();
//! let x: Point = "4,0,2".parse().unwrap();
//! assert_eq!(choquet(&v, &x).unwrap().value, 2.0);
//! ```

pub mod axioms;
pub mod error;
pub mod format;
pub mod integral;
pub mod oracle;
pub mod par;
pub mod random;
pub mod setfunction;
pub mod subset;
pub mod tolerance;

pub use axioms::{Aggregator, Axiom, AxiomReport, CheckConfig, Family, Verdict};
pub use error::{Error, Result};
pub use integral::{
    choquet, choquet_batch, choquet_capacity, choquet_mobius, common_sort_permutation,
    comonotonic, lovasz_extension, sort_permutation, EvaluationResult, Point, SortPermutation,
};
pub use par::Execution;
pub use setfunction::{
    basis_decomposition, mobius_transform, mobius_transform_with, unanimity_game,
    validate_capacity, validate_signed_capacity, zeta_transform, zeta_transform_with, Capacity,
    MobiusRepresentation, SetFunction, SignedCapacity,
};
pub use subset::{Subset, MAX_GROUND_SET};
pub use tolerance::Tolerance;
