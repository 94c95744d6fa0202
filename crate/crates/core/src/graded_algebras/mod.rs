//! Graded algebras `A_L = ⊕ L^k t^k` through their value semigroups.

pub mod algebra;
pub mod reports;

pub use algebra::{algebra_semigroup, body_approximation, hilbert_function, AlgebraSemigroup, AlgebraSpec, BodyApproximation, Power};
pub use reports::{
    bernstein_report, brunn_minkowski_report, componentwise_product, fujita_report, fujita_scan, kushnirenko_report,
    BernsteinReport, BrunnMinkowskiReport, FujitaScan, KushnirenkoReport, LevelInclusion, SuperadditivityReport,
};
