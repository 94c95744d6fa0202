use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use super::algebra::{algebra_semigroup, body_approximation, full_growth, AlgebraSpec};
use crate::error::{Error, Result};
use crate::num::{compare_root_sums, factorial, rat_from_int, serde_str, Rat};
use crate::polyhedra::{convex_hull_i64, mixed_volume, RationalPolytope};
use crate::semigroup::{level_subsemigroup, FujitaReport};
use crate::valuations::product_subspace;

/// Polytope side of the Kušnirenko theorem for `L(I)`.
#[derive(Clone, Debug, Serialize)]
pub struct KushnirenkoReport {
    pub exponents: Vec<Vec<i64>>,
    pub delta_i: RationalPolytope,
    pub body_at_1: RationalPolytope,
    pub body_at_k: RationalPolytope,
    pub truncation: usize,
    /// Both truncated bodies equal `Δ_I`.
    pub exact: bool,
    #[serde(with = "serde_str::rational")]
    pub volume: Rat,
    /// `n! Vol(Δ_I)`.
    #[serde(with = "serde_str::rational")]
    pub kushnirenko_number: Rat,
}

pub fn kushnirenko_report(exponents: &[Vec<i64>], truncation: usize) -> Result<KushnirenkoReport> {
    let delta_i = convex_hull_i64(exponents)?;
    let n = delta_i.ambient_dim();
    let a = AlgebraSpec::monomial(exponents, truncation)?;
    let body_at_k = body_approximation(&a)?.cumulative;
    let body_at_1 = body_approximation(&a.with_truncation(1)?)?.cumulative;
    let volume = delta_i.volume();
    Ok(KushnirenkoReport {
        exponents: exponents.to_vec(),
        exact: body_at_1 == delta_i && body_at_k == delta_i,
        kushnirenko_number: &volume * rat_from_int(&factorial(n)),
        delta_i,
        body_at_1,
        body_at_k,
        truncation,
        volume,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BernsteinReport {
    pub polytopes: Vec<RationalPolytope>,
    #[serde(with = "serde_str::rational")]
    pub mixed_volume: Rat,
    /// `n! V(Δ_1, ..., Δ_n)`.
    #[serde(with = "serde_str::rational")]
    pub bernstein_number: Rat,
}

pub fn bernstein_report(exponent_sets: &[Vec<Vec<i64>>]) -> Result<BernsteinReport> {
    let polytopes = exponent_sets.iter().map(|s| convex_hull_i64(s)).collect::<Result<Vec<_>>>()?;
    let n = polytopes.first().map_or(0, |p| p.ambient_dim());
    let mv = mixed_volume(&polytopes)?.value;
    Ok(BernsteinReport { bernstein_number: &mv * rat_from_int(&factorial(n)), mixed_volume: mv, polytopes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelInclusion {
    pub k: usize,
    /// `#(values_a(k) + values_b(k))`.
    pub sum_size: usize,
    pub product_size: usize,
    /// Points of the sumset missing from the product values.
    pub missing: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperadditivityReport {
    pub truncation: usize,
    pub levels: Vec<LevelInclusion>,
    pub holds: bool,
}

fn sumset(a: &[Vec<i64>], b: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.iter().zip(y).map(|(u, v)| u + v).collect())).collect()
}

/// `A_{L'L''}` with a per-level check `values_a(k) + values_b(k) ⊆ values_ab(k)`.
pub fn componentwise_product(a: &AlgebraSpec, b: &AlgebraSpec) -> Result<(AlgebraSpec, SuperadditivityReport)> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch);
    }
    if a.nvars() != b.nvars() {
        return Err(Error::DimMismatch { expected: a.nvars(), got: b.nvars() });
    }
    let k_max = a.truncation().min(b.truncation());
    let space = product_subspace(a.space(), b.space(), a.order())?;
    let ab = AlgebraSpec::new(space, a.order().clone(), k_max)?;
    let (va, vb, vab) = (a.values()?, b.values()?, ab.values()?);
    let levels: Vec<LevelInclusion> = (0..=k_max)
        .map(|k| {
            let s = sumset(&va[k], &vb[k]);
            let have: BTreeSet<&Vec<i64>> = vab[k].iter().collect();
            LevelInclusion {
                k,
                sum_size: s.len(),
                product_size: vab[k].len(),
                missing: s.iter().filter(|x| !have.contains(x)).cloned().collect(),
            }
        })
        .collect();
    let holds = levels.iter().all(|l| l.missing.is_empty());
    Ok((ab, SuperadditivityReport { truncation: k_max, levels, holds }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrunnMinkowskiReport {
    pub n: usize,
    /// Truncation at which the coefficients were taken.
    pub truncation: usize,
    /// Truncations tried, in order.
    pub attempts: Vec<usize>,
    #[serde(with = "serde_str::rational")]
    pub rho_a: Rat,
    #[serde(with = "serde_str::rational")]
    pub rho_b: Rat,
    #[serde(with = "serde_str::rational")]
    pub rho_ab: Rat,
    /// `rho_a^(1/n) + rho_b^(1/n) <= rho_ab^(1/n)`.
    pub holds: bool,
    pub equality: bool,
}

/// Truncated growth coefficients of `A`, `B` and `AB`; the truncation doubles
/// (up to `max_truncation`) while the inequality fails.
pub fn brunn_minkowski_report(a: &AlgebraSpec, b: &AlgebraSpec, max_truncation: usize) -> Result<BrunnMinkowskiReport> {
    let mut k = a.truncation().min(b.truncation());
    let n = a.nvars();
    let mut attempts = Vec::new();
    loop {
        attempts.push(k);
        let (ak, bk) = (a.with_truncation(k)?, b.with_truncation(k)?);
        let (ab, _) = componentwise_product(&ak, &bk)?;
        let (rho_a, rho_b, rho_ab) = (full_growth(&ak)?, full_growth(&bk)?, full_growth(&ab)?);
        let cmp = compare_root_sums(&[rho_a.clone(), rho_b.clone()], std::slice::from_ref(&rho_ab), n as u32);
        let holds = cmp != std::cmp::Ordering::Greater;
        if holds || 2 * k > max_truncation {
            return Ok(BrunnMinkowskiReport {
                n,
                truncation: k,
                attempts,
                rho_a,
                rho_b,
                rho_ab,
                holds,
                equality: cmp == std::cmp::Ordering::Equal,
            });
        }
        k *= 2;
    }
}

/// `φ(p)` for the subalgebra generated by `L^p`, compared with the truncated target.
pub fn fujita_report(a: &AlgebraSpec, p: usize) -> Result<FujitaReport> {
    if p == 0 || p > a.truncation() {
        return Err(Error::BeyondTruncation { requested: p, truncation: a.truncation() });
    }
    let s = algebra_semigroup(a)?;
    if s.levels[p].is_empty() {
        return Err(Error::EmptyComponent(p));
    }
    level_subsemigroup(&s.semigroup, p as i64).map(|(_, r)| r)
}

/// Fujita reports for `p = 1..=K` and the least `p0` from which `φ(p)/p^q` is constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FujitaScan {
    pub reports: Vec<FujitaReport>,
    pub stable_from: usize,
}

pub fn fujita_scan(a: &AlgebraSpec) -> Result<FujitaScan> {
    let reports = (1..=a.truncation()).map(|p| fujita_report(a, p)).collect::<Result<Vec<_>>>()?;
    let last = reports.last().map(|r| r.phi_over_k_q.clone()).unwrap_or_else(Rat::zero);
    let stable_from = reports.iter().rposition(|r| r.phi_over_k_q != last).map_or(1, |i| i + 2);
    Ok(FujitaScan { reports, stable_from })
}
