use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::frame::Frame;
use super::polytope::RationalPolytope;
use crate::error::{Error, Result};
use crate::linalg::rational;
use crate::num::{primitive_direction, rat_from_int, rational_nth_root, Int, Rat};

/// Direction-sampled Hausdorff distance between two polytopes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HausdorffEstimate {
    /// `max_w (h_P(w) - h_Q(w))^2 / |w|^2` over the sample, exact.
    #[serde(with = "crate::num::serde_str::rational")]
    pub squared: Rat,
    /// Rational upper bound on the square root of `squared` (exact when it is a square).
    #[serde(with = "crate::num::serde_str::rational")]
    pub upper: Rat,
    pub directions: usize,
}

fn sqrt_upper(x: &Rat) -> Rat {
    if let Some(r) = rational_nth_root(x, 2) {
        return r;
    }
    let scale = Int::from(10u64.pow(6));
    let scaled = x * rat_from_int(&(&scale * &scale));
    let ceil = scaled.ceil().to_integer();
    let mut s = ceil.sqrt();
    if &s * &s < ceil {
        s += Int::one();
    }
    Rat::new(s, scale)
}

/// Facet normals, their projections to the direction space, span normals and coordinate axes.
pub fn default_directions(p: &RationalPolytope, q: &RationalPolytope) -> Vec<Vec<Rat>> {
    let n = p.ambient_dim();
    let mut set: BTreeSet<Vec<Int>> = BTreeSet::new();
    let mut add = |v: &[Rat]| {
        if v.iter().any(|x| !x.is_zero()) {
            let d = primitive_direction(v);
            let neg: Vec<Int> = d.iter().map(|x| -x).collect();
            set.insert(d);
            set.insert(neg);
        }
    };
    for body in [p, q] {
        let frame = Frame::affine(body.vertices());
        let h = body.hrep();
        for f in &h.facets {
            add(&f.normal);
            add(&frame.project_direction(&f.normal));
        }
        for e in &h.equations {
            add(&e.normal);
        }
    }
    for i in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[i] = Rat::one();
        add(&e);
    }
    set.into_iter().map(|d| d.iter().map(rat_from_int).collect()).collect()
}

/// Maximum support-function gap over `directions` (the default sample when `None`).
pub fn hausdorff_distance_upper(
    p: &RationalPolytope,
    q: &RationalPolytope,
    directions: Option<&[Vec<Rat>]>,
) -> Result<HausdorffEstimate> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimMismatch { expected: p.ambient_dim(), got: q.ambient_dim() });
    }
    let owned;
    let dirs = match directions {
        Some(d) => d,
        None => {
            owned = default_directions(p, q);
            &owned
        }
    };
    let mut squared = Rat::zero();
    for w in dirs {
        let norm2 = rational::dot(w, w);
        if norm2.is_zero() {
            continue;
        }
        let gap = (p.support(w) - q.support(w)).abs();
        let val = &gap * &gap / norm2;
        if val > squared {
            squared = val;
        }
    }
    Ok(HausdorffEstimate { upper: sqrt_upper(&squared), squared, directions: dirs.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};
    use crate::polyhedra::convex_hull_i64;

    fn poly(v: &[&[i64]]) -> RationalPolytope {
        convex_hull_i64(&v.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn examples() {
        let a = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let b = poly(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        assert!(hausdorff_distance_upper(&a, &a, None).unwrap().upper.is_zero());
        assert_eq!(hausdorff_distance_upper(&a, &b, None).unwrap().upper, rat_int(1));
        let axes = vec![vec![rat_int(1), rat_int(0)], vec![rat_int(-1), rat_int(0)]];
        let r = hausdorff_distance_upper(&poly(&[&[0, 0]]), &poly(&[&[1, 0]]), Some(&axes)).unwrap();
        assert_eq!(r.upper, rat_int(1));
    }

    #[test]
    fn irrational_distance_is_bounded_above() {
        let a = poly(&[&[0, 0]]);
        let b = poly(&[&[0, 0], &[1, 1]]);
        let r = hausdorff_distance_upper(&a, &b, None).unwrap();
        assert_eq!(r.squared, rat_int(2));
        assert!(&r.upper * &r.upper >= rat_int(2));
        assert!(r.upper < rat(1415, 1000));
    }
}
