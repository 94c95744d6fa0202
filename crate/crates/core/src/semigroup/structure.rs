use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::spec::{Mode, SemigroupSpec};
use crate::error::{Error, Result};
use crate::linalg::{level_functional, subgroup_index, Index, Lattice, LevelFunctional};
use crate::num::{int, Int};
use crate::polyhedra::RationalCone;

/// Group, cone and half-space data of a semigroup.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub mode: Mode,
    pub ambient_dim: usize,
    /// `L(S) ∩ Z^n`.
    pub span_lattice: Lattice,
    /// `G(S)`.
    pub group: Lattice,
    /// `[L(S) ∩ Z^n : G(S)]`.
    pub group_index: Index,
    pub cone: RationalCone,
    #[serde(with = "crate::num::serde_str::integer_mat")]
    pub facet_normals: Vec<Vec<Int>>,
    pub ridge: Lattice,
    pub strongly_convex: bool,
    /// Graded modes only: `G_0(S)`, the level-zero part of the group.
    pub group0: Option<Lattice>,
    /// Graded modes only: integer points of the boundary hyperplane of `L(S)`.
    pub boundary_lattice: Option<Lattice>,
    pub level_functional: Option<LevelFunctional>,
    pub strongly_admissible: Option<bool>,
    /// Support period: the gcd of the levels.
    pub m: Option<i64>,
    /// `[boundary_lattice : group0]`.
    pub ind: Option<Index>,
    /// Dimension of the boundary hyperplane.
    pub q: Option<usize>,
}

impl StructureReport {
    pub fn m(&self) -> i64 {
        self.m.expect("graded semigroup")
    }

    pub fn q(&self) -> usize {
        self.q.expect("graded semigroup")
    }

    pub fn ind(&self) -> Int {
        match &self.ind {
            Some(Index::Finite(v)) => v.clone(),
            _ => panic!("graded semigroup has a finite index"),
        }
    }

    pub fn is_strongly_admissible(&self) -> bool {
        self.strongly_admissible == Some(true)
    }
}

fn to_int(v: &[Vec<i64>]) -> Vec<Vec<Int>> {
    v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

/// Structure analysis. Level tables are analyzed through their listed points.
pub fn analyze(spec: &SemigroupSpec) -> Result<StructureReport> {
    let n = spec.ambient_dim();
    let gens = spec.generators();
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let g = to_int(&gens);
    let group = Lattice::from_generators(n, &g);
    let span_lattice = group.saturation();
    let group_index = subgroup_index(&group, &span_lattice)?;
    let cone = RationalCone::new(n, g.clone());
    let facet_normals = cone.facet_normals().to_vec();
    let ridge = cone.ridge().clone();
    let strongly_convex = cone.is_strictly_convex();

    let mut report = StructureReport {
        mode: spec.mode(),
        ambient_dim: n,
        span_lattice,
        group,
        group_index,
        cone,
        facet_normals,
        ridge,
        strongly_convex,
        group0: None,
        boundary_lattice: None,
        level_functional: None,
        strongly_admissible: None,
        m: None,
        ind: None,
        q: None,
    };
    if !spec.is_graded() {
        return Ok(report);
    }

    let last = n - 1;
    let group0 = report.group.slice_zero(last);
    let boundary = report.span_lattice.slice_zero(last);
    let positive = g.iter().find(|x| x[last] > Int::zero()).ok_or(Error::NotNonNegative)?;
    report.level_functional = Some(level_functional(&report.span_lattice, &boundary, positive)?);
    report.m = Some(report.group.coordinate_gcd(last).to_i64().expect("levels fit in i64"));
    report.ind = Some(subgroup_index(&group0, &boundary)?);
    report.q = Some(boundary.rank());
    report.strongly_admissible = Some(gens.iter().all(|x| x[last] > 0 || x.iter().all(|&c| c == 0)));
    report.group0 = Some(group0);
    report.boundary_lattice = Some(boundary);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_pair() {
        let s = SemigroupSpec::nonneg(vec![vec![1, 1], vec![2, 1]]).unwrap();
        let r = analyze(&s).unwrap();
        assert_eq!(r.group, Lattice::full(2));
        assert_eq!(r.m(), 1);
        assert_eq!(r.ind(), int(1));
        assert_eq!(r.q(), 1);
        assert!(r.is_strongly_admissible());
        assert!(r.strongly_convex);
    }

    #[test]
    fn even_levels() {
        let r = analyze(&SemigroupSpec::nonneg(vec![vec![0, 2]]).unwrap()).unwrap();
        assert_eq!(r.m(), 2);
        assert_eq!(r.q(), 0);
        assert_eq!(r.ind(), int(1));
    }

    #[test]
    fn index_two() {
        let r = analyze(&SemigroupSpec::nonneg(vec![vec![0, 1], vec![2, 1]]).unwrap()).unwrap();
        assert_eq!(r.ind(), int(2));
        assert_eq!(r.m(), 1);
    }

    #[test]
    fn ridge_in_plain_mode() {
        let r = analyze(&SemigroupSpec::plain(vec![vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap()).unwrap();
        assert!(!r.strongly_convex);
        assert_eq!(r.ridge, Lattice::from_i64(2, &[vec![1, 0]]));
        assert!(r.m.is_none());
    }

    #[test]
    fn level_zero_generator_is_not_admissible() {
        let r = analyze(&SemigroupSpec::nonneg(vec![vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(r.strongly_admissible, Some(false));
        assert!(r.strongly_convex);
    }
}
