use std::collections::BTreeSet;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::enumerate::{for_each_box_point, grade, graded_sets_with, regularization_graded};
use super::fm::{feasible, Constraint};
use super::spec::SemigroupSpec;
use super::structure::analyze;
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg::{rational, solve_integer, IntMatrix};
use crate::num::{int, rat_int, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConductorReport {
    pub g0: Vec<i64>,
    /// Generators `a_i` (nonzero, sorted) in the order of `multipliers`.
    pub generators: Vec<Vec<i64>>,
    /// `m_i` with `g0 = sum m_i a_i`.
    pub multipliers: Vec<i64>,
    /// `Q = P ∩ G(S)` for the half-open parallelepiped `P`.
    pub parallelepiped_points: Vec<Vec<i64>>,
}

/// Whether `x = sum l_i a_i` for some `0 <= l_i < 1`, where `a_i` are the columns.
pub(crate) fn in_half_open_parallelepiped(columns_as_rows: &[Vec<Rat>], x: &[Rat]) -> bool {
    let r = columns_as_rows.len();
    let n = x.len();
    let a: Vec<Vec<Rat>> = (0..n).map(|i| columns_as_rows.iter().map(|c| c[i].clone()).collect()).collect();
    let Some(particular) = rational::solve(&a, x, r) else {
        return false;
    };
    let kernel = rational::nullspace(&a, r);
    let d = kernel.len();
    let mut cons = Vec::with_capacity(2 * r);
    for i in 0..r {
        let row: Vec<Rat> = kernel.iter().map(|k| k[i].clone()).collect();
        // -(p_i + row.mu) <= 0
        cons.push(Constraint { coeffs: row.iter().map(|v| -v.clone()).collect(), bound: particular[i].clone(), strict: false });
        // p_i + row.mu < 1
        cons.push(Constraint { coeffs: row, bound: Rat::one() - &particular[i], strict: true });
    }
    feasible(cons, d)
}

/// An element `g0` of `S` with `Reg(S) + g0 ⊆ S`, assembled from integer
/// representations of the group points in the half-open parallelepiped.
pub fn conductor(spec: &SemigroupSpec) -> Result<ConductorReport> {
    let n = spec.ambient_dim();
    spec.require_generators()?;
    let gens = spec.nonzero_generators();
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if gens.len() > limits::DEFAULT_MAX_GENERATORS {
        return Err(Error::Input(format!(
            "{} generators exceed the limit of {}",
            gens.len(),
            limits::DEFAULT_MAX_GENERATORS
        )));
    }
    let structure = analyze(spec)?;
    let lo: Vec<i64> = (0..n).map(|j| gens.iter().map(|g| g[j].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..n).map(|j| gens.iter().map(|g| g[j].max(0)).sum()).collect();
    let cols: Vec<Vec<Rat>> = gens.iter().map(|g| g.iter().map(|&x| rat_int(x)).collect()).collect();
    let mut q_points = Vec::new();
    for_each_box_point(&lo, &hi, |x| {
        if !structure.group.contains_i64(x) {
            return;
        }
        let xq: Vec<Rat> = x.iter().map(|&v| rat_int(v)).collect();
        if in_half_open_parallelepiped(&cols, &xq) {
            q_points.push(x.to_vec());
        }
    });

    let a = IntMatrix::from_rows(
        gens.len(),
        (0..n).map(|i| gens.iter().map(|g| int(g[i])).collect()).collect(),
    );
    let mut mins = vec![Int::zero(); gens.len()];
    for q in &q_points {
        let b: Vec<Int> = q.iter().map(|&v| int(v)).collect();
        let k = solve_integer(&a, &b).expect("points of Q lie in the group");
        for (m, ki) in mins.iter_mut().zip(k) {
            if ki < *m {
                *m = ki;
            }
        }
    }
    let multipliers: Vec<i64> = mins.iter().map(|m| (Int::one() - m).to_i64().expect("multiplier fits in i64")).collect();
    let mut g0 = vec![0i64; n];
    for (g, &m) in gens.iter().zip(&multipliers) {
        for (acc, v) in g0.iter_mut().zip(g) {
            *acc += m * v;
        }
    }
    Ok(ConductorReport { g0, generators: gens, multipliers, parallelepiped_points: q_points })
}

/// Points `r` of `Reg(S)` with `grade(r + g0) <= max_grade` and `r + g0 ∉ S`.
pub fn conductor_violations(spec: &SemigroupSpec, g0: &[i64], max_grade: usize) -> Result<Vec<Vec<i64>>> {
    let structure = analyze(spec)?;
    let (w, s) = graded_sets_with(spec, &structure, max_grade)?;
    let g0_grade = grade(&w, g0);
    if g0_grade < 0 || g0_grade as usize > max_grade {
        return Ok(Vec::new());
    }
    let reach = max_grade - g0_grade as usize;
    let (_, reg) = regularization_graded(spec, &structure, reach)?;
    let mut bad = Vec::new();
    for level in &reg {
        for r in level {
            let shifted: Vec<i64> = r.iter().zip(g0).map(|(a, b)| a + b).collect();
            let k = grade(&w, &shifted) as usize;
            let present: BTreeSet<&Vec<i64>> = s[k].iter().collect();
            if !present.contains(&shifted) {
                bad.push(r.clone());
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::gaps;

    #[test]
    fn numerical_semigroups() {
        for (gens, gap_set) in [(vec![2, 3], vec![1]), (vec![3, 5], vec![1, 2, 4, 7])] {
            let s = SemigroupSpec::plain(gens.iter().map(|&g| vec![g]).collect()).unwrap();
            let report = conductor(&s).unwrap();
            let g0 = report.g0[0];
            assert!(g0 > *gap_set.iter().max().unwrap());
            assert!(conductor_violations(&s, &report.g0, 60).unwrap().is_empty());
            let found: Vec<i64> = gaps(&s, 30).unwrap().into_iter().map(|p| p[0]).collect();
            assert_eq!(found, gap_set);
        }
    }

    #[test]
    fn lattice_basis_with_positive_generator() {
        let s = SemigroupSpec::plain(vec![vec![1, 0], vec![1, 2], vec![1, 1]]).unwrap();
        let report = conductor(&s).unwrap();
        assert!(conductor_violations(&s, &report.g0, 25).unwrap().is_empty());
    }

    #[test]
    fn nonneg_with_missing_point() {
        let s = SemigroupSpec::nonneg(vec![vec![1, 1], vec![3, 1]]).unwrap();
        let report = conductor(&s).unwrap();
        assert!(report.parallelepiped_points.contains(&vec![2, 1]) || report.parallelepiped_points.contains(&vec![0, 0]));
        assert!(conductor_violations(&s, &report.g0, 30).unwrap().is_empty());
    }

    #[test]
    fn half_open_membership() {
        let cols = vec![vec![rat_int(2)], vec![rat_int(3)]];
        assert!(in_half_open_parallelepiped(&cols, &[rat_int(0)]));
        assert!(in_half_open_parallelepiped(&cols, &[rat_int(4)]));
        assert!(!in_half_open_parallelepiped(&cols, &[rat_int(5)]));
        assert!(!in_half_open_parallelepiped(&cols, &[rat_int(-1)]));
    }
}
