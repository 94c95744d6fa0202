//! Finitely generated semigroups of lattice points and their level structure.

pub mod approx;
pub mod body;
pub mod conductor;
pub mod enumerate;
pub(crate) mod fm;
pub mod fujita;
pub mod levelwise;
pub mod spec;
pub mod structure;

pub use approx::{approximation_threshold, shrunk_cone, verify_approximation, ApproximationReport};
pub use body::{growth_report, hilbert, newton_okounkov_body, weighted_sum_report, GrowthReport, HilbertTable, NewtonOkounkovBody};
pub use conductor::{conductor, conductor_violations, ConductorReport};
pub use enumerate::{gaps, graded_sets, levels, regularization_levels, regularization_sets, LevelSets};
pub use fujita::{level_subsemigroup, FujitaReport};
pub use levelwise::levelwise_sum;
pub use spec::{Mode, SemigroupSpec, Source};
pub use structure::{analyze, StructureReport};
