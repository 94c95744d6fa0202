use num_traits::Zero;
use serde::Serialize;

use super::body::body_with;
use super::enumerate::graded_sets_with;
use super::spec::SemigroupSpec;
use super::structure::analyze;
use crate::error::{Error, Result};
use crate::num::{rat_from_int, rat_int, serde_str, Int, Rat};
use crate::polyhedra::convex_hull_i64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FujitaReport {
    pub p: i64,
    /// `#S_p`.
    pub level_size: usize,
    /// Dimension of `conv(S_p)`.
    pub dim: usize,
    pub q: usize,
    #[serde(with = "serde_str::integer")]
    pub ind_p: Int,
    /// `Vol_q(conv S_p) / ind(Ŝ_p)`.
    #[serde(with = "serde_str::rational")]
    pub phi: Rat,
    #[serde(with = "serde_str::rational")]
    pub phi_over_p_q: Rat,
    /// `φ(p) / (p/m)^q`, the quantity comparable to `target` when `m > 1`.
    #[serde(with = "serde_str::rational")]
    pub phi_over_k_q: Rat,
    /// `Vol_q(Δ(S)) / ind(S)`.
    #[serde(with = "serde_str::rational")]
    pub target: Rat,
}

fn pow(base: &Rat, e: usize) -> Rat {
    (0..e).fold(rat_int(1), |acc, _| acc * base)
}

/// The subsemigroup `Ŝ_p` generated by the level `S_p`, with its growth constant.
pub fn level_subsemigroup(spec: &SemigroupSpec, p: i64) -> Result<(SemigroupSpec, FujitaReport)> {
    spec.require_graded()?;
    if p < 1 {
        return Err(Error::Input(format!("level {p} must be positive")));
    }
    let structure = analyze(spec)?;
    let body = body_with(spec, &structure)?;
    let (_, sets) = graded_sets_with(spec, &structure, p as usize)?;
    let level = sets[p as usize].clone();
    if level.is_empty() {
        return Err(Error::EmptyLevel(p));
    }
    let sub = SemigroupSpec::nonneg(level.clone())?;
    let sub_structure = analyze(&sub)?;
    let hull = convex_hull_i64(&level)?;
    let q = structure.q();
    let ind_p = sub_structure.ind();
    let phi = if hull.dim() == q { hull.integral_volume() / rat_from_int(&ind_p) } else { Rat::zero() };
    let phi_over_p_q = &phi / pow(&rat_int(p), q);
    let phi_over_k_q = &phi / pow(&(rat_int(p) / rat_int(structure.m())), q);
    let report = FujitaReport {
        p,
        level_size: level.len(),
        dim: hull.dim(),
        q,
        ind_p,
        phi,
        phi_over_p_q,
        phi_over_k_q,
        target: body.growth_limit,
    };
    Ok((sub, report))
}
