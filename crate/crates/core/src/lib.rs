pub mod error;
pub mod limits;
pub mod linalg;
pub mod num;
pub mod polyhedra;
pub mod semigroup;
pub mod valuations;
pub mod graded_algebras;
pub mod random;
pub mod harness;
pub mod cli;
