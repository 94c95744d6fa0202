//! Exact integer and rational linear algebra: Hermite normal forms, lattices,
//! subgroup indices, integer solving and level functionals.

pub mod lattice;
pub mod matrix;
pub mod rational;

pub use lattice::{
    group_generated, level_functional, saturation, solve_integer, subgroup_index, Index, Lattice, LevelFunctional,
};
pub use matrix::{hnf, IntMatrix};
