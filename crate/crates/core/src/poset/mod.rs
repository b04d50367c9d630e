//! Finite posets and their incidence algebras over `Z` and `Z/n`.

mod incidence;
mod order;
mod ring;

pub use incidence::{
    chain_counts_to, hall_column, hall_mu, mobius, mobius_column, standard_functions,
    IncidenceFunction,
};
pub use order::Poset;
pub use ring::CoefficientRing;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("row {row} has length {len}, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("reflexivity fails at {x}")]
    Reflexivity { x: usize },
    #[error("antisymmetry fails for ({x}, {y})")]
    Antisymmetry { x: usize, y: usize },
    #[error("transitivity fails for {x} <= {y} <= {z}")]
    Transitivity { x: usize, y: usize, z: usize },
    #[error("({x}, {y}) is not a comparable pair")]
    Incomparable { x: usize, y: usize },
    #[error("incidence functions live on different posets")]
    PosetMismatch,
    #[error("incidence functions use different coefficient rings")]
    RingMismatch,
    #[error("diagonal value {value} at element {x} is not a unit")]
    NonUnitDiagonal { x: usize, value: BigInt },
    #[error("right inverse is not a left inverse")]
    InverseCheckFailed,
    #[error("invalid poset json: {0}")]
    Json(String),
}
