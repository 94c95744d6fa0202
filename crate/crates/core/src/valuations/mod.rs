//! Term orders on `Z^n`, Gröbner valuations of Laurent polynomials and value
//! sets of finite-dimensional subspaces.

pub mod order;
pub mod poly;
pub mod subspace;

pub use order::{GradedValue, OrderKind, TermOrder};
pub use poly::LaurentPoly;
pub use subspace::{product_subspace, reduce_subspace, LaurentSubspace, Reduction};
