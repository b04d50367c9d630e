//! Verification of the lattice congruences and identities against
//! independent counts.

mod algebra;
mod arith_suite;
mod brown;
mod burnside;
mod congruences;
mod coset;
mod generators;
mod identities;
mod report;

pub use algebra::{build_lattice_algebra, LatticeAlgebra};
pub use arith_suite::{arith_suite, ring_property_reports};
pub use brown::{brown_suite, prop63_suite, verify_prop63};
pub use burnside::{
    burnside_oracle, burnside_suite, prop21_suite, verify_element_order_congruence,
    verify_lambda_congruences, BurnsideOracle,
};
pub use congruences::{
    frobenius_suite, hio_suite, muthm_suite, sylow_suite, verify_frobenius, verify_hio,
    verify_muthm, verify_sylow_congruence,
};
pub use coset::{bouc_check, bouc_suite, CosetPoset, DEFAULT_COSET_BUDGET};
pub use generators::{generating_tuples, generator_suite, min_generators};
pub use identities::identity_suite;
pub use report::CongruenceReport;

use thiserror::Error;

use crate::group::GroupError;
use crate::poset::PosetError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("{n} does not divide {of}")]
    NotDivisor { n: usize, of: usize },
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("subgroup {lower} is not contained in subgroup {upper}")]
    NotSubgroupPair { lower: usize, upper: usize },
    #[error("group order {order} exceeds the orbit enumeration bound {bound}")]
    BurnsideBound { order: usize, bound: usize },
    #[error("{what} exceeds budget {limit}")]
    Budget { what: &'static str, limit: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}
