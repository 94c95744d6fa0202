//! Exact rational polytopes and cones.

pub mod cone;
pub(crate) mod dd;
pub mod frame;
pub mod hausdorff;
pub mod inequality;
pub mod integrate;
pub mod mixed;
pub mod polytope;

pub use cone::RationalCone;
pub use hausdorff::{hausdorff_distance_upper, HausdorffEstimate};
pub use inequality::{check_inequalities, InequalityMode, InequalityReport, Side};
pub use integrate::{integrate_homogeneous, Polynomial};
pub use mixed::{mixed_volume, MixedVolumeReport};
pub use polytope::{convex_hull, convex_hull_i64, integral_volume, minkowski_sum, HRep, Inequality, RationalPolytope};
