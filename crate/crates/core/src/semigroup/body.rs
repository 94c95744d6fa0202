use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::enumerate::graded_sets_with;
use super::spec::SemigroupSpec;
use super::structure::{analyze, StructureReport};
use crate::error::{Error, Result};
use crate::num::{format_rational, rat_from_int, rat_int, serde_str, Rat};
use crate::polyhedra::{convex_hull, integrate_homogeneous, Polynomial, RationalPolytope};

/// Cross-section of `Con(S)` at level `m`, with its projection `Δ₀` dropping the level.
#[derive(Clone, Debug, Serialize)]
pub struct NewtonOkounkovBody {
    pub body: RationalPolytope,
    /// `None` when there are no coordinates besides the level.
    pub projected: Option<RationalPolytope>,
    pub m: i64,
    pub q: usize,
    #[serde(with = "serde_str::integer")]
    pub ind: crate::num::Int,
    /// `Vol_q` of the body in the integral measure, zero when `dim < q`.
    #[serde(with = "serde_str::rational")]
    pub volume: Rat,
    /// `Vol_q(Δ) / ind`.
    #[serde(with = "serde_str::rational")]
    pub growth_limit: Rat,
    /// Set for level tables: the body is the hull of the listed points only.
    pub truncation: Option<i64>,
}

fn section_points(spec: &SemigroupSpec, m: i64) -> Vec<Vec<Rat>> {
    let last = spec.ambient_dim() - 1;
    spec.generators()
        .into_iter()
        .filter(|g| g[last] > 0)
        .map(|g| {
            let k = rat_int(g[last]);
            g.iter().map(|&x| rat_int(x) * rat_int(m) / &k).collect()
        })
        .collect()
}

pub(crate) fn body_with(spec: &SemigroupSpec, structure: &StructureReport) -> Result<NewtonOkounkovBody> {
    spec.require_graded()?;
    let last = spec.ambient_dim() - 1;
    if let Some(g) = spec.nonzero_generators().into_iter().find(|g| g[last] == 0) {
        return Err(Error::NotStronglyAdmissible(format!(
            "generator {g:?} lies on the boundary hyperplane, so the cross-section is unbounded"
        )));
    }
    let m = structure.m();
    let body = convex_hull(&section_points(spec, m))?;
    let projected = if last == 0 { None } else { Some(body.project(&(0..last).collect::<Vec<_>>())?) };
    let q = structure.q();
    let ind = structure.ind();
    let volume = if body.dim() == q { body.integral_volume() } else { Rat::zero() };
    let growth_limit = &volume / rat_from_int(&ind);
    Ok(NewtonOkounkovBody { body, projected, m, q, ind, volume, growth_limit, truncation: spec.truncation() })
}

/// The Newton–Okounkov body of a strongly admissible graded semigroup.
pub fn newton_okounkov_body(spec: &SemigroupSpec) -> Result<NewtonOkounkovBody> {
    let structure = analyze(spec)?;
    body_with(spec, &structure)
}

/// Level counts `H(k)` and the normalized sequence `H(mk)/k^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub values: Vec<u64>,
    pub m: i64,
    pub q: usize,
    /// Entry `k - 1` is `H(mk)/k^q`, for `1 <= k <= K/m`.
    #[serde(with = "serde_str::rational_vec")]
    pub normalized: Vec<Rat>,
}

impl HilbertTable {
    /// Rows `k, H(k), H(mk)/k^q`; the last column is empty where `mk` exceeds the range.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,H(k),H(mk)/k^q\n");
        for (k, h) in self.values.iter().enumerate() {
            let norm = if k >= 1 { self.normalized.get(k - 1).map(format_rational).unwrap_or_default() } else { String::new() };
            out.push_str(&format!("{k},{h},{norm}\n"));
        }
        out
    }
}

fn pow(k: i64, e: usize) -> Rat {
    let mut r = Rat::one();
    for _ in 0..e {
        r *= rat_int(k);
    }
    r
}

pub(crate) fn hilbert_with(spec: &SemigroupSpec, structure: &StructureReport, k_max: usize) -> Result<HilbertTable> {
    spec.require_graded()?;
    let (_, sets) = graded_sets_with(spec, structure, k_max)?;
    let m = structure.m();
    let q = structure.q();
    let values: Vec<u64> = sets.iter().map(|s| s.len() as u64).collect();
    let normalized = (1..)
        .take_while(|&k| (m * k) as usize <= k_max)
        .map(|k| rat_int(values[(m * k) as usize] as i64) / pow(k, q))
        .collect();
    Ok(HilbertTable { values, m, q, normalized })
}

/// Hilbert function `H(k) = #S_k` for `0 <= k <= K`.
pub fn hilbert(spec: &SemigroupSpec, k_max: usize) -> Result<HilbertTable> {
    let structure = analyze(spec)?;
    hilbert_with(spec, &structure, k_max)
}

/// Comparison of a normalized sequence with its predicted limit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub q: usize,
    pub m: i64,
    #[serde(with = "serde_str::rational_vec")]
    pub sequence: Vec<Rat>,
    #[serde(with = "serde_str::rational")]
    pub limit_prediction: Rat,
    /// `|a_K - L| / L`, or `|a_K|` when `L = 0`; absent for an empty sequence.
    #[serde(with = "serde_str::rational_opt")]
    pub last_relative_error: Option<Rat>,
}

fn relative_error(last: Option<&Rat>, limit: &Rat) -> Option<Rat> {
    last.map(|a| if limit.is_zero() { a.abs() } else { ((a - limit) / limit).abs() })
}

/// Normalized Hilbert sequence against `Vol_q(Δ)/ind`.
pub fn growth_report(spec: &SemigroupSpec, k_max: usize) -> Result<GrowthReport> {
    let structure = analyze(spec)?;
    let body = body_with(spec, &structure)?;
    let h = hilbert_with(spec, &structure, k_max)?;
    let last_relative_error = relative_error(h.normalized.last(), &body.growth_limit);
    Ok(GrowthReport {
        q: h.q,
        m: h.m,
        sequence: h.normalized,
        limit_prediction: body.growth_limit,
        last_relative_error,
    })
}

/// Weighted level sums `sum_{x in S_mk} f(x) / k^(q+d)` against
/// `∫_Δ f^(d) / ind`. The polynomial may omit the level variable.
pub fn weighted_sum_report(spec: &SemigroupSpec, f: &Polynomial, k_max: usize) -> Result<GrowthReport> {
    let n = spec.ambient_dim();
    let f = if f.nvars() + 1 == n {
        f.extend_vars(n)
    } else if f.nvars() == n {
        f.clone()
    } else {
        return Err(Error::DimMismatch { expected: n, got: f.nvars() });
    };
    let structure = analyze(spec)?;
    let body = body_with(spec, &structure)?;
    let d = f.degree().unwrap_or(0) as usize;
    let top = f.top_component();
    let limit_prediction = integrate_homogeneous(&body.body, &top)? / rat_from_int(&body.ind);
    let (_, sets) = graded_sets_with(spec, &structure, k_max)?;
    let m = body.m;
    let sequence: Vec<Rat> = (1..)
        .take_while(|&k| (m * k) as usize <= k_max)
        .map(|k| {
            let total: Rat = sets[(m * k) as usize]
                .iter()
                .map(|x| f.eval(&x.iter().map(|&v| rat_int(v)).collect::<Vec<_>>()))
                .sum();
            total / pow(k, body.q + d)
        })
        .collect();
    let last_relative_error = relative_error(sequence.last(), &limit_prediction);
    Ok(GrowthReport { q: body.q, m, sequence, limit_prediction, last_relative_error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn nonneg(g: &[&[i64]]) -> SemigroupSpec {
        SemigroupSpec::nonneg(g.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn bodies() {
        let b = newton_okounkov_body(&nonneg(&[&[1, 1], &[2, 1]])).unwrap();
        assert_eq!(b.body, convex_hull(&[vec![rat_int(1), rat_int(1)], vec![rat_int(2), rat_int(1)]]).unwrap());
        assert_eq!(b.volume, rat_int(1));
        let ray = newton_okounkov_body(&nonneg(&[&[0, 1]])).unwrap();
        assert_eq!((ray.q, ray.volume.clone()), (0, rat_int(1)));
        let wide = newton_okounkov_body(&nonneg(&[&[0, 1], &[2, 1]])).unwrap();
        assert_eq!((wide.volume.clone(), wide.ind.clone(), wide.growth_limit.clone()), (rat_int(2), crate::num::int(2), rat_int(1)));
        let bad = newton_okounkov_body(&nonneg(&[&[1, 0], &[0, 1]]));
        assert!(matches!(bad, Err(Error::NotStronglyAdmissible(_))));
    }

    #[test]
    fn body_at_level_m() {
        let b = newton_okounkov_body(&nonneg(&[&[0, 2], &[2, 2]])).unwrap();
        assert_eq!(b.m, 2);
        assert_eq!(b.body.vertices()[1], vec![rat_int(2), rat_int(2)]);
    }

    #[test]
    fn growth() {
        let g = growth_report(&nonneg(&[&[1, 1], &[2, 1]]), 10).unwrap();
        assert_eq!(g.limit_prediction, rat_int(1));
        assert_eq!(g.sequence[2], rat(4, 3));
        assert_eq!(g.last_relative_error, Some(rat(1, 10)));
        let w = growth_report(&nonneg(&[&[0, 1], &[2, 1]]), 6).unwrap();
        assert_eq!(w.sequence[5], rat(7, 6));
        assert_eq!(w.limit_prediction, rat_int(1));
        let r = growth_report(&nonneg(&[&[0, 1]]), 5).unwrap();
        assert!(r.sequence.iter().all(|v| v == &rat_int(1)));
        assert_eq!(r.last_relative_error, Some(Rat::zero()));
    }

    #[test]
    fn hilbert_csv() {
        let h = hilbert(&nonneg(&[&[0, 2]]), 4).unwrap();
        assert_eq!(h.values, vec![0, 0, 1, 0, 1]);
        assert_eq!(h.to_csv(), "k,H(k),H(mk)/k^q\n0,0,\n1,0,1\n2,1,1\n3,0,\n4,1,\n");
    }

    #[test]
    fn weighted_sums() {
        let s = nonneg(&[&[1, 1], &[2, 1]]);
        let one = weighted_sum_report(&s, &Polynomial::constant(1, rat_int(1)), 6).unwrap();
        assert_eq!(one.limit_prediction, rat_int(1));
        let x = weighted_sum_report(&s, &Polynomial::variable(1, 0), 20).unwrap();
        assert_eq!(x.limit_prediction, rat(3, 2));
        // sum_{a=k}^{2k} a / k^2 = 3(k+1)/(2k)
        assert_eq!(x.sequence[19], rat(63, 40));
        let ray = weighted_sum_report(&nonneg(&[&[0, 1]]), &Polynomial::variable(1, 0), 5).unwrap();
        assert_eq!(ray.limit_prediction, Rat::zero());
        assert!(ray.sequence.iter().all(|v| v.is_zero()));
    }
}
