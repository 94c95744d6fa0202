use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::conductor::conductor;
use super::enumerate::{cone_section, for_each_box_point, grade, grading};
use super::spec::SemigroupSpec;
use super::structure::analyze;
use crate::error::{Error, Result};
use crate::linalg::rational::dot;
use crate::num::{primitive_direction, rat_from_int, rat_int, serde_str, Int, Rat};
use crate::polyhedra::RationalCone;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproximationReport {
    /// Threshold `N²`; points with `|x|² <= N²` are not tested.
    #[serde(with = "serde_str::rational")]
    pub n_squared: Rat,
    pub bound: i64,
    /// Number of group points of the inner cone with `N² < |x|² <= K²`.
    pub checked: usize,
    pub violations: Vec<Vec<i64>>,
}

fn to_rat(x: &[i64]) -> Vec<Rat> {
    x.iter().map(|&v| rat_int(v)).collect()
}

fn norm2(x: &[i64]) -> Rat {
    rat_int(x.iter().map(|v| v * v).sum())
}

/// Checks that every nonzero generator of `inner` lies in the relative interior of `Con(S)`.
fn check_inner(outer: &RationalCone, inner: &RationalCone) -> Result<()> {
    if outer.ambient_dim() != inner.ambient_dim() {
        return Err(Error::DimMismatch { expected: outer.ambient_dim(), got: inner.ambient_dim() });
    }
    for g in inner.ray_generators() {
        if g.iter().all(|x| x.is_zero()) {
            continue;
        }
        let q: Vec<Rat> = g.iter().map(rat_from_int).collect();
        if !outer.in_relative_interior(&q) {
            return Err(Error::ConeNotInterior(format!("generator {q:?} is not in the relative interior")));
        }
    }
    if !inner.is_strictly_convex() {
        return Err(Error::ConeNotInterior("inner cone contains a line".into()));
    }
    Ok(())
}

/// Enumerates group points of `inner` with `N² < |x|² <= K²` and lists those outside `S`.
pub fn verify_approximation(
    spec: &SemigroupSpec,
    inner: &RationalCone,
    n_squared: &Rat,
    bound: i64,
) -> Result<ApproximationReport> {
    let structure = analyze(spec)?;
    check_inner(&structure.cone, inner)?;
    let k2 = rat_int(bound * bound);
    if bound < 0 || &k2 < n_squared {
        return Err(Error::Input(format!("enumeration bound {bound} is below the threshold")));
    }
    let n = spec.ambient_dim();
    let mut candidates = Vec::new();
    for_each_box_point(&vec![-bound; n], &vec![bound; n], |x| {
        let r = norm2(x);
        if &r <= n_squared || r > k2 || !structure.group.contains_i64(x) {
            return;
        }
        if inner.contains(&to_rat(x)) {
            candidates.push(x.to_vec());
        }
    });
    let w = grading(spec, &structure)?;
    let max_grade = candidates.iter().map(|x| grade(&w, x)).max().unwrap_or(0).max(0) as usize;
    let sets = super::enumerate::graded_sets_with(spec, &structure, max_grade)?.1;
    let members: BTreeSet<&Vec<i64>> = sets.iter().flatten().collect();
    let violations = candidates.iter().filter(|x| !members.contains(x)).cloned().collect();
    Ok(ApproximationReport { n_squared: n_squared.clone(), bound, checked: candidates.len(), violations })
}

/// `Con(S)` pulled 10% toward the centroid of its grade-one section.
pub fn shrunk_cone(spec: &SemigroupSpec) -> Result<RationalCone> {
    let structure = analyze(spec)?;
    let w = grading(spec, &structure)?;
    let section = cone_section(&spec.generators(), &w);
    if section.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = spec.ambient_dim();
    let count = rat_int(section.len() as i64);
    let centroid: Vec<Rat> = (0..n).map(|j| section.iter().map(|u| u[j].clone()).sum::<Rat>() / &count).collect();
    let gens: Vec<Vec<Int>> = section
        .iter()
        .map(|u| {
            let v: Vec<Rat> = u.iter().zip(&centroid).map(|(a, c)| (a * rat_int(9) + c) / rat_int(10)).collect();
            primitive_direction(&v)
        })
        .collect();
    Ok(RationalCone::new(n, gens))
}

/// A threshold `N²` for which the approximation statement holds on `inner`:
/// group points of `inner` beyond `N` sit at distance at least `|g0|` from every
/// facet of `Con(S)`, so subtracting the conductor stays in `Reg(S)`.
pub fn approximation_threshold(spec: &SemigroupSpec, inner: &RationalCone) -> Result<Rat> {
    let structure = analyze(spec)?;
    check_inner(&structure.cone, inner)?;
    let g0 = conductor(spec)?.g0;
    let frame = structure.cone.span_frame();
    let hs: Vec<Vec<Rat>> = inner
        .ray_generators()
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .map(|g| g.iter().map(rat_from_int).collect())
        .collect();
    let mut min_cos2: Option<Rat> = None;
    for a in structure.cone.facet_normals() {
        let a: Vec<Rat> = frame.project_direction(&a.iter().map(rat_from_int).collect::<Vec<_>>());
        for h in &hs {
            let d = dot(&a, h);
            debug_assert!(d.is_positive());
            let c2 = &d * &d / (dot(&a, &a) * dot(h, h));
            if min_cos2.as_ref().is_none_or(|m| &c2 < m) {
                min_cos2 = Some(c2);
            }
        }
    }
    Ok(match min_cos2 {
        Some(c2) => norm2(&g0) / c2,
        None => Rat::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_point_is_eventually_filled() {
        // (2,3) lies in the group and the cone but not in S_3 = {0, 1, 3} x {3}
        let s = SemigroupSpec::nonneg(vec![vec![0, 3], vec![1, 3], vec![3, 3]]).unwrap();
        let inner = shrunk_cone(&s).unwrap();
        let full = verify_approximation(&s, &inner, &Rat::zero(), 4).unwrap();
        assert_eq!(full.violations, vec![vec![2, 3]]);
        let n2 = approximation_threshold(&s, &inner).unwrap();
        let bound = num_integer::Roots::sqrt(&n2.ceil().to_integer()).to_string().parse::<i64>().unwrap() + 6;
        let r = verify_approximation(&s, &inner, &n2, bound).unwrap();
        assert!(r.violations.is_empty());
        assert!(r.checked > 0);
    }

    #[test]
    fn parity_semigroup_is_saturated() {
        let s = SemigroupSpec::nonneg(vec![vec![1, 1], vec![3, 1]]).unwrap();
        let inner = shrunk_cone(&s).unwrap();
        assert!(verify_approximation(&s, &inner, &Rat::zero(), 10).unwrap().violations.is_empty());
    }

    #[test]
    fn numerical_violation() {
        let s = SemigroupSpec::plain(vec![vec![2], vec![3]]).unwrap();
        let ray = RationalCone::from_i64(1, &[vec![1]]);
        let r = verify_approximation(&s, &ray, &Rat::zero(), 10).unwrap();
        assert_eq!(r.violations, vec![vec![1]]);
        let n2 = approximation_threshold(&s, &ray).unwrap();
        assert!(verify_approximation(&s, &ray, &n2, 40).unwrap().violations.is_empty());
    }

    #[test]
    fn saturated_has_no_violations() {
        let s = SemigroupSpec::nonneg(vec![vec![0, 1], vec![1, 1]]).unwrap();
        let inner = shrunk_cone(&s).unwrap();
        assert!(verify_approximation(&s, &inner, &Rat::zero(), 12).unwrap().violations.is_empty());
    }

    #[test]
    fn boundary_cone_rejected() {
        let s = SemigroupSpec::nonneg(vec![vec![0, 1], vec![1, 1]]).unwrap();
        let touching = RationalCone::from_i64(2, &[vec![0, 1], vec![1, 2]]);
        assert!(matches!(verify_approximation(&s, &touching, &Rat::zero(), 5), Err(Error::ConeNotInterior(_))));
    }
}
