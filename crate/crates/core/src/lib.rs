//! Finite groups, their subgroup lattices and incidence algebras, arithmetic
//! functions mod `n`, and exact verification of the congruences that tie
//! them together.

pub mod arith;
pub mod bitset;
pub mod corpus;
pub mod group;
pub mod poset;
pub mod runner;
pub mod theorems;

pub use arith::{ArithmeticFunction, StandardArith};
pub use group::{GroupSpec, GroupTable, Subgroup, SubgroupLattice};
pub use poset::{CoefficientRing, IncidenceFunction, Poset};
pub use theorems::{build_lattice_algebra, CongruenceReport, CosetPoset, LatticeAlgebra};
