use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;
use crate::num::{rat_int, serde_str, Int, Rat};
use crate::polyhedra::{convex_hull_i64, hausdorff_distance_upper, HausdorffEstimate, RationalPolytope};
use crate::semigroup::body::body_with;
use crate::semigroup::{analyze, HilbertTable, SemigroupSpec, StructureReport};
use crate::valuations::{LaurentPoly, LaurentSubspace, TermOrder};

/// The graded piece `L^k`: a leaf basis and its value set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Power {
    pub degree: usize,
    pub basis: Vec<LaurentPoly>,
    /// Values sorted in coordinate order.
    pub values: Vec<Vec<i64>>,
}

impl Power {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `A_L = ⊕ L^k t^k` with a term order, truncated at degree `K`.
#[derive(Debug)]
pub struct AlgebraSpec {
    space: LaurentSubspace,
    order: TermOrder,
    truncation: usize,
    powers: OnceLock<Result<Vec<Power>>>,
}

impl Clone for AlgebraSpec {
    fn clone(&self) -> Self {
        let powers = OnceLock::new();
        if let Some(p) = self.powers.get() {
            let _ = powers.set(p.clone());
        }
        AlgebraSpec { space: self.space.clone(), order: self.order.clone(), truncation: self.truncation, powers }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    #[serde(rename = "L")]
    space: LaurentSubspace,
    order: TermOrder,
    #[serde(rename = "K")]
    truncation: usize,
}

impl Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraJson { space: self.space.clone(), order: self.order.clone(), truncation: self.truncation }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = AlgebraJson::deserialize(d)?;
        AlgebraSpec::new(j.space, j.order, j.truncation).map_err(serde::de::Error::custom)
    }
}

fn sorted_values(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    v.sort();
    v
}

impl AlgebraSpec {
    pub fn new(space: LaurentSubspace, order: TermOrder, truncation: usize) -> Result<AlgebraSpec> {
        if truncation < 1 {
            return Err(Error::Input("truncation K must be at least 1".into()));
        }
        limits::check_dim(space.nvars() + 1)?;
        space.reduce(&order)?;
        Ok(AlgebraSpec { space, order, truncation, powers: OnceLock::new() })
    }

    /// `A_{L(I)}` under plain lexicographic order.
    pub fn monomial(exponents: &[Vec<i64>], truncation: usize) -> Result<AlgebraSpec> {
        let n = exponents.first().map(|e| e.len()).ok_or_else(|| Error::Empty("exponent set".into()))?;
        AlgebraSpec::new(LaurentSubspace::monomial(n, exponents)?, TermOrder::lex(n), truncation)
    }

    pub fn space(&self) -> &LaurentSubspace {
        &self.space
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.space.nvars()
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Same algebra with another truncation.
    pub fn with_truncation(&self, truncation: usize) -> Result<AlgebraSpec> {
        AlgebraSpec::new(self.space.clone(), self.order.clone(), truncation)
    }

    fn compute_powers(&self) -> Result<Vec<Power>> {
        let n = self.nvars();
        let bound = limits::max_power_dim();
        let one = Power { degree: 0, basis: vec![LaurentPoly::one(n)], values: vec![vec![0; n]] };
        let first = self.space.reduce(&self.order)?;
        let mut out = vec![one];
        let mut prev = first.leaf_basis.clone();
        out.push(Power { degree: 1, basis: prev.clone(), values: sorted_values(first.values) });
        for k in 2..=self.truncation {
            let products: Vec<LaurentPoly> =
                prev.iter().flat_map(|f| first.leaf_basis.iter().map(move |g| f * g)).collect();
            let next = LaurentSubspace::spanned_by(n, &products, &self.order)?;
            if next.dim() > bound {
                return Err(Error::PowerTooLarge { bound });
            }
            let r = next.reduce(&self.order)?;
            prev = r.leaf_basis.clone();
            out.push(Power { degree: k, basis: r.leaf_basis, values: sorted_values(r.values) });
        }
        Ok(out)
    }

    /// `L^0, ..., L^K`, computed once.
    pub fn powers(&self) -> Result<&[Power]> {
        match self.powers.get_or_init(|| self.compute_powers()) {
            Ok(p) => Ok(p),
            Err(e) => Err(e.clone()),
        }
    }

    /// `v(L^k \ {0})` for `0 <= k <= K`.
    pub fn values(&self) -> Result<Vec<Vec<Vec<i64>>>> {
        Ok(self.powers()?.iter().map(|p| p.values.clone()).collect())
    }
}

/// Values of `A_L` as a truncated level table, with its structure.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSemigroup {
    pub truncation: usize,
    /// Level `k` is `v(L^k \ {0})`.
    pub levels: Vec<Vec<Vec<i64>>>,
    /// The same data as a table semigroup in `Z^n x Z`.
    pub semigroup: SemigroupSpec,
    /// Structure of the listed points; `ind` is an upper bound for the full algebra.
    pub structure: StructureReport,
}

pub fn algebra_semigroup(a: &AlgebraSpec) -> Result<AlgebraSemigroup> {
    let levels = a.values()?;
    let map: BTreeMap<i64, Vec<Vec<i64>>> = levels.iter().enumerate().map(|(k, v)| (k as i64, v.clone())).collect();
    let semigroup = SemigroupSpec::table(Some(a.nvars() + 1), map, a.truncation() as i64)?;
    let structure = analyze(&semigroup)?;
    Ok(AlgebraSemigroup { truncation: a.truncation(), levels, semigroup, structure })
}

/// `H(k) = dim L^k` with the normalized sequence of the truncated semigroup.
pub fn hilbert_function(a: &AlgebraSpec) -> Result<HilbertTable> {
    let s = algebra_semigroup(a)?;
    let values: Vec<u64> = a.powers()?.iter().map(|p| p.dim() as u64).collect();
    let m = s.structure.m();
    let q = s.structure.q();
    let normalized = (1..)
        .take_while(|&k| (m * k) as usize <= a.truncation())
        .map(|k| rat_int(values[(m * k) as usize] as i64) / num_traits::pow(rat_int(k), q))
        .collect();
    Ok(HilbertTable { values, m, q, normalized })
}

/// Truncated approximations of `Δ(A)` in `R^n`.
#[derive(Clone, Debug, Serialize)]
pub struct BodyApproximation {
    pub truncation: usize,
    /// Entry `k - 1` is `conv(v(L^k)) / k`.
    pub per_level: Vec<RationalPolytope>,
    /// `conv(∪_{j <= K} v(L^j) / j)`.
    pub cumulative: RationalPolytope,
    /// Entry `j - 1` is the integral volume of the cumulative hull through level `j`.
    #[serde(with = "serde_str::rational_vec")]
    pub cumulative_volumes: Vec<Rat>,
    /// Hausdorff upper bounds between cumulative hulls through `j` and `j + 1`.
    pub diagnostics: Vec<HausdorffEstimate>,
    pub q: usize,
    /// Index of the truncated semigroup: an upper bound for `ind(A)`.
    #[serde(with = "serde_str::integer")]
    pub ind_upper_bound: Int,
    /// `Vol_q` of the cumulative hull: a lower bound for `Vol_q(Δ(A))`.
    #[serde(with = "serde_str::rational")]
    pub volume_lower_bound: Rat,
    /// Integral volume of `conv(v(L^k))` for `k = 1..=K`.
    #[serde(with = "serde_str::rational_vec")]
    pub level_hull_volumes: Vec<Rat>,
    pub hilbert: Vec<u64>,
}

impl BodyApproximation {
    /// Rows `k, H(k), Vol(conv v(L^k))`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,H(k),level_hull_volume\n");
        for (k, h) in self.hilbert.iter().enumerate() {
            let vol = if k == 0 { String::new() } else { crate::num::format_rational(&self.level_hull_volumes[k - 1]) };
            out.push_str(&format!("{k},{h},{vol}\n"));
        }
        out
    }
}

fn scaled(points: &[Vec<i64>], k: usize) -> Vec<Vec<Rat>> {
    let d = rat_int(k as i64);
    points.iter().map(|p| p.iter().map(|&x| rat_int(x) / &d).collect()).collect()
}

pub fn body_approximation(a: &AlgebraSpec) -> Result<BodyApproximation> {
    let s = algebra_semigroup(a)?;
    let powers = a.powers()?;
    let mut per_level = Vec::new();
    let mut level_hull_volumes = Vec::new();
    let mut cumulative_hulls: Vec<RationalPolytope> = Vec::new();
    let mut pool: Vec<Vec<Rat>> = Vec::new();
    for k in 1..=a.truncation() {
        let pts = &powers[k].values;
        let hull = convex_hull_i64(pts)?;
        level_hull_volumes.push(hull.integral_volume());
        let sc = crate::polyhedra::convex_hull(&scaled(pts, k))?;
        pool.extend(sc.vertices().iter().cloned());
        per_level.push(sc);
        let cum = crate::polyhedra::convex_hull(&pool)?;
        pool = cum.vertices().to_vec();
        cumulative_hulls.push(cum);
    }
    let diagnostics = cumulative_hulls
        .windows(2)
        .map(|w| hausdorff_distance_upper(&w[0], &w[1], None))
        .collect::<Result<Vec<_>>>()?;
    let q = s.structure.q();
    let cumulative = cumulative_hulls.last().expect("K >= 1").clone();
    let vol = |p: &RationalPolytope| if p.dim() == q { p.integral_volume() } else { Rat::zero() };
    let cumulative_volumes = cumulative_hulls.iter().map(vol).collect();
    let volume_lower_bound = vol(&cumulative);
    Ok(BodyApproximation {
        truncation: a.truncation(),
        per_level,
        cumulative,
        cumulative_volumes,
        diagnostics,
        q,
        ind_upper_bound: s.structure.ind(),
        volume_lower_bound,
        level_hull_volumes,
        hilbert: powers.iter().map(|p| p.dim() as u64).collect(),
    })
}

/// Growth coefficient `Vol_n(Δ_K)/ind` of the truncated algebra, requiring `m = 1`
/// and a full-dimensional body.
pub(crate) fn full_growth(a: &AlgebraSpec) -> Result<Rat> {
    let s = algebra_semigroup(a)?;
    let m = s.structure.m();
    if m != 1 {
        return Err(Error::MNotOne(m));
    }
    let body = body_with(&s.semigroup, &s.structure)?;
    let n = a.nvars();
    if body.body.dim() != n {
        return Err(Error::NotFullDimensional { dim: body.body.dim(), expected: n });
    }
    Ok(body.growth_limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn span(n: usize, polys: &[&[(&[i64], i64)]], k: usize) -> AlgebraSpec {
        let basis = polys.iter().map(|p| LaurentPoly::from_i64(n, p)).collect();
        AlgebraSpec::new(LaurentSubspace::new(n, basis).unwrap(), TermOrder::lex(n), k).unwrap()
    }

    #[test]
    fn hilbert_functions() {
        let line = span(1, &[&[(&[0], 1)], &[(&[1], 1)]], 6);
        assert_eq!(hilbert_function(&line).unwrap().values, vec![1, 2, 3, 4, 5, 6, 7]);
        let one = span(2, &[&[(&[0, 0], 1)]], 4);
        assert_eq!(hilbert_function(&one).unwrap().values, vec![1; 5]);
        let tri = AlgebraSpec::monomial(&[vec![0, 0], vec![1, 0], vec![0, 1]], 5).unwrap();
        let h = hilbert_function(&tri).unwrap();
        assert_eq!(h.values, (0..=5u64).map(|k| (k + 1) * (k + 2) / 2).collect::<Vec<_>>());
        assert_eq!(h.q, 2);
    }

    #[test]
    fn semigroup_levels() {
        let i = vec![vec![0, 0], vec![2, 1], vec![1, 3]];
        let s = algebra_semigroup(&AlgebraSpec::monomial(&i, 3).unwrap()).unwrap();
        let mut two: Vec<Vec<i64>> = i.iter().flat_map(|a| i.iter().map(move |b| vec![a[0] + b[0], a[1] + b[1]])).collect();
        two.sort();
        two.dedup();
        assert_eq!(s.levels[2], two);
        let nonmono = span(2, &[&[(&[0, 0], 1)], &[(&[1, 0], 1)], &[(&[2, 0], 1), (&[0, 1], 1)]], 2);
        assert_eq!(algebra_semigroup(&nonmono).unwrap().levels[1], vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn bodies() {
        let sq = AlgebraSpec::monomial(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], 3).unwrap();
        let b = body_approximation(&sq).unwrap();
        assert_eq!(b.cumulative, convex_hull_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap());
        assert_eq!(b.volume_lower_bound, rat_int(1));
        assert!(b.diagnostics.iter().all(|d| d.squared.is_zero()));
        let one = AlgebraSpec::monomial(&[vec![0, 0]], 2).unwrap();
        let p = body_approximation(&one).unwrap();
        assert_eq!((p.q, p.cumulative.dim()), (0, 0));
        let basis = [&[(&[0i64, 0][..], 1)][..], &[(&[1, 0], 1)], &[(&[0, 1], 1)], &[(&[2, 0], 1), (&[1, 1], 1)]];
        let polys = basis.iter().map(|p| LaurentPoly::from_i64(2, p)).collect();
        let yx = AlgebraSpec::new(LaurentSubspace::new(2, polys).unwrap(), TermOrder::lex_perm(vec![1, 0]).unwrap(), 2).unwrap();
        let b = body_approximation(&yx).unwrap();
        assert_eq!(b.per_level[0], convex_hull_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0]]).unwrap());
        assert_eq!(b.level_hull_volumes[0], rat_int(1));
        assert!(b.cumulative_volumes[1] >= b.cumulative_volumes[0]);
    }

    #[test]
    fn growth_of_triangle() {
        let tri = AlgebraSpec::monomial(&[vec![0, 0], vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(full_growth(&tri).unwrap(), rat(1, 2));
        let seg = AlgebraSpec::monomial(&[vec![0, 0], vec![1, 0]], 2).unwrap();
        assert!(matches!(full_growth(&seg), Err(Error::NotFullDimensional { .. })));
    }

    #[test]
    fn json() {
        let j = r#"{"L":{"basis":[{"terms":[{"exp":[0],"coef":"1"}]},{"terms":[{"exp":[1],"coef":"1"}]}]},"order":{"kind":"lex","perm":[0]},"K":3}"#;
        let a: AlgebraSpec = serde_json::from_str(j).unwrap();
        assert_eq!(a.truncation(), 3);
        assert_eq!(serde_json::to_string(&a).unwrap(), j);
    }
}
