use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use super::spec::{SemigroupSpec, Source};
use super::structure::{analyze, StructureReport};
use crate::error::{Error, Result};
use crate::num::{rat_int, Rat};

/// Level sets `S_0, ..., S_K`, each sorted lexicographically.
pub type LevelSets = Vec<Vec<Vec<i64>>>;

pub(crate) fn grade(weight: &[i64], x: &[i64]) -> i64 {
    weight.iter().zip(x).map(|(w, v)| w * v).sum()
}

/// Integer functional used to grade the semigroup: the level coordinate in the
/// graded modes, a positive functional on the cone in plain mode.
pub(crate) fn grading(spec: &SemigroupSpec, structure: &StructureReport) -> Result<Vec<i64>> {
    let n = spec.ambient_dim();
    if spec.is_graded() {
        let mut w = vec![0; n];
        w[n - 1] = 1;
        if let Some(g) = spec.nonzero_generators().into_iter().find(|g| g[n - 1] == 0) {
            return Err(Error::LevelZeroGenerator(g));
        }
        return Ok(w);
    }
    let w = structure.cone.positive_grading().ok_or(Error::NotPointed)?;
    Ok(w.iter().map(|x| x.to_i64().expect("grading fits in i64")).collect())
}

/// Points of the semigroup generated by `gens`, bucketed by grade up to `max_grade`.
/// Grade zero holds the origin only when it is itself a generator.
pub(crate) fn graded_closure(gens: &[Vec<i64>], weight: &[i64], max_grade: usize) -> LevelSets {
    let n = weight.len();
    let mut sets: Vec<BTreeSet<Vec<i64>>> = vec![BTreeSet::new(); max_grade + 1];
    if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
        sets[0].insert(vec![0; n]);
    }
    let graded: Vec<(&Vec<i64>, usize)> = gens
        .iter()
        .filter_map(|g| {
            let d = grade(weight, g);
            (d >= 1).then_some((g, d as usize))
        })
        .collect();
    for k in 1..=max_grade {
        let mut level = BTreeSet::new();
        for &(g, d) in &graded {
            if d > k {
                continue;
            }
            if d == k {
                level.insert(g.clone());
            }
            for p in &sets[k - d] {
                level.insert(p.iter().zip(g).map(|(a, b)| a + b).collect());
            }
        }
        sets[k] = level;
    }
    sets.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// Graded pieces of the semigroup up to grade `max_grade`, with the grading used.
pub fn graded_sets(spec: &SemigroupSpec, max_grade: usize) -> Result<(Vec<i64>, LevelSets)> {
    let structure = analyze(spec)?;
    graded_sets_with(spec, &structure, max_grade)
}

pub(crate) fn graded_sets_with(
    spec: &SemigroupSpec,
    structure: &StructureReport,
    max_grade: usize,
) -> Result<(Vec<i64>, LevelSets)> {
    match spec.source() {
        Source::Generators(gens) => {
            let w = grading(spec, structure)?;
            Ok((w.clone(), graded_closure(gens, &w, max_grade)))
        }
        Source::Table { levels, truncation } => {
            if max_grade as i64 > *truncation {
                return Err(Error::BeyondTruncation { requested: max_grade, truncation: *truncation as usize });
            }
            let n = spec.ambient_dim();
            let mut w = vec![0; n];
            w[n - 1] = 1;
            let sets = (0..=max_grade as i64).map(|k| levels.get(&k).cloned().unwrap_or_default()).collect();
            Ok((w, sets))
        }
    }
}

/// Level sets `S_0..S_K` of a graded semigroup.
pub fn levels(spec: &SemigroupSpec, k_max: usize) -> Result<LevelSets> {
    spec.require_graded()?;
    graded_sets(spec, k_max).map(|(_, s)| s)
}

pub(crate) fn for_each_box_point(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64])) {
    let n = lo.len();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut cur = lo.to_vec();
    loop {
        f(&cur);
        let mut j = n;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if cur[j] < hi[j] {
                cur[j] += 1;
                cur[j + 1..].copy_from_slice(&lo[j + 1..]);
                break;
            }
        }
    }
}

/// Points of `G(S) ∩ Con(S)` of grade exactly `k`, given the cone section vertices at grade one.
fn regularization_level(structure: &StructureReport, section: &[Vec<Rat>], weight: &[i64], k: i64) -> Vec<Vec<i64>> {
    let n = weight.len();
    if k == 0 {
        return vec![vec![0; n]];
    }
    let kk = rat_int(k);
    let lo: Vec<i64> = (0..n)
        .map(|j| section.iter().map(|v| (&v[j] * &kk).ceil()).min().unwrap().to_integer().to_i64().unwrap())
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|j| section.iter().map(|v| (&v[j] * &kk).floor()).max().unwrap().to_integer().to_i64().unwrap())
        .collect();
    let mut out = Vec::new();
    for_each_box_point(&lo, &hi, |x| {
        if grade(weight, x) != k || !structure.group.contains_i64(x) {
            return;
        }
        let q: Vec<Rat> = x.iter().map(|&v| rat_int(v)).collect();
        if structure.cone.contains(&q) {
            out.push(x.to_vec());
        }
    });
    out
}

pub(crate) fn cone_section(gens: &[Vec<i64>], weight: &[i64]) -> Vec<Vec<Rat>> {
    gens.iter()
        .filter_map(|g| {
            let d = grade(weight, g);
            (d > 0).then(|| g.iter().map(|&x| rat_int(x) / rat_int(d)).collect())
        })
        .collect()
}

/// Graded pieces of `Reg(S) = G(S) ∩ Con(S)` up to grade `max_grade`.
pub(crate) fn regularization_graded(
    spec: &SemigroupSpec,
    structure: &StructureReport,
    max_grade: usize,
) -> Result<(Vec<i64>, LevelSets)> {
    let gens = spec.require_generators()?;
    let w = grading(spec, structure)?;
    let section = cone_section(gens, &w);
    let sets = (0..=max_grade as i64).map(|k| regularization_level(structure, &section, &w, k)).collect();
    Ok((w, sets))
}

/// Level sets of `Reg(S)` up to level `K` (level zero is the origin).
pub fn regularization_levels(spec: &SemigroupSpec, k_max: usize) -> Result<LevelSets> {
    spec.require_graded()?;
    let structure = analyze(spec)?;
    regularization_graded(spec, &structure, k_max).map(|(_, s)| s)
}

/// Graded pieces of `Reg(S)` under the grading of [`graded_sets`]; works in plain mode too.
pub fn regularization_sets(spec: &SemigroupSpec, max_grade: usize) -> Result<(Vec<i64>, LevelSets)> {
    let structure = analyze(spec)?;
    regularization_graded(spec, &structure, max_grade)
}

/// Points of `Reg(S) \ S` of grade `1..=max_grade`, in grade then lexicographic order.
pub fn gaps(spec: &SemigroupSpec, max_grade: usize) -> Result<Vec<Vec<i64>>> {
    let structure = analyze(spec)?;
    let (_, reg) = regularization_graded(spec, &structure, max_grade)?;
    let (_, s) = graded_sets_with(spec, &structure, max_grade)?;
    let mut out = Vec::new();
    for k in 1..=max_grade {
        let present: BTreeSet<&Vec<i64>> = s[k].iter().collect();
        out.extend(reg[k].iter().filter(|p| !present.contains(p)).cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nonneg(g: &[&[i64]]) -> SemigroupSpec {
        SemigroupSpec::nonneg(g.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn level_sets() {
        let s = levels(&nonneg(&[&[1, 1], &[2, 1]]), 3).unwrap();
        assert!(s[0].is_empty());
        assert_eq!(s[2], vec![vec![2, 2], vec![3, 2], vec![4, 2]]);
        let r = levels(&nonneg(&[&[0, 1]]), 2).unwrap();
        assert_eq!(r[1], vec![vec![0, 1]]);
        assert_eq!(r[2], vec![vec![0, 2]]);
        let e = levels(&nonneg(&[&[0, 2]]), 3).unwrap();
        assert!(e[1].is_empty() && e[3].is_empty());
        assert_eq!(e[2], vec![vec![0, 2]]);
    }

    #[test]
    fn level_zero_generators_rejected() {
        let s = nonneg(&[&[1, 0], &[0, 1]]);
        assert_eq!(levels(&s, 2), Err(Error::LevelZeroGenerator(vec![1, 0])));
        let with_zero = nonneg(&[&[0, 0], &[1, 1]]);
        assert_eq!(levels(&with_zero, 1).unwrap()[0], vec![vec![0, 0]]);
    }

    #[test]
    fn brute_force_level_two() {
        // sums of exactly two generators
        let g = [[1i64, 1], [3, 1], [2, 2]];
        let s = levels(&nonneg(&[&g[0], &g[1], &g[2]]), 2).unwrap();
        let mut expect = BTreeSet::new();
        for a in &g {
            for b in &g {
                if a[1] + b[1] == 2 {
                    expect.insert(vec![a[0] + b[0], 2]);
                }
            }
            if a[1] == 2 {
                expect.insert(a.to_vec());
            }
        }
        assert_eq!(s[2], expect.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn regularization_examples() {
        let s = nonneg(&[&[2, 1], &[3, 1]]);
        let reg = regularization_levels(&s, 4).unwrap();
        for (k, level) in reg.iter().enumerate().skip(1) {
            let k = k as i64;
            let expect: Vec<Vec<i64>> = (2 * k..=3 * k).map(|a| vec![a, k]).collect();
            assert_eq!(level, &expect);
        }
        let t = nonneg(&[&[1, 1], &[2, 1]]);
        let (r, l) = (regularization_levels(&t, 8).unwrap(), levels(&t, 8).unwrap());
        assert_eq!(&r[1..], &l[1..]);
        let ray = nonneg(&[&[1, 1]]);
        assert_eq!(&regularization_levels(&ray, 5).unwrap()[1..], &levels(&ray, 5).unwrap()[1..]);
    }

    #[test]
    fn numerical_semigroup_gaps() {
        let two_three = SemigroupSpec::plain(vec![vec![2], vec![3]]).unwrap();
        assert_eq!(gaps(&two_three, 20).unwrap(), vec![vec![1]]);
        let three_five = SemigroupSpec::plain(vec![vec![3], vec![5]]).unwrap();
        assert_eq!(gaps(&three_five, 30).unwrap(), vec![vec![1], vec![2], vec![4], vec![7]]);
    }

    #[test]
    fn box_iteration() {
        let mut n = 0;
        for_each_box_point(&[0, -1], &[2, 1], |_| n += 1);
        assert_eq!(n, 9);
        let mut m = 0;
        for_each_box_point(&[], &[], |_| m += 1);
        assert_eq!(m, 1);
    }
}
