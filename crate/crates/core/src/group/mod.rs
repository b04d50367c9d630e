//! Finite groups as Cayley tables, their subgroups and subgroup lattices.

mod counting;
mod lattice;
mod spec;
mod subgroup;
mod table;

pub use counting::{chi, frobenius_solution_count, gamma_count, single_joins};
pub use lattice::{enumerate_subgroups, SubgroupLattice, DEFAULT_SUBGROUP_BUDGET};
pub use spec::{CycleNotation, GroupSpec};
pub use subgroup::{generated_subgroup, join, join_with, Subgroup};
pub use table::{build_group, GroupTable, DEFAULT_MAX_ORDER};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unsupported group family {family:?} at position {position}")]
    UnsupportedFamily { position: usize, family: String },
    #[error("group order exceeds the configured maximum of {limit}")]
    OrderExceeded { limit: usize },
    #[error("subgroup enumeration exceeded the budget of {limit} subgroups")]
    BudgetExceeded { limit: usize },
    #[error("{n} does not divide the group order {order}")]
    NotDivisor { n: usize, order: usize },
    #[error("group law violated: {0}")]
    LawViolation(String),
}

/// Parses `text` and builds the group in one step.
pub fn group_from_spec(text: &str, max_order: usize) -> Result<GroupTable, GroupError> {
    build_group(&GroupSpec::parse(text)?, max_order)
}
