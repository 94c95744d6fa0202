use num_traits::Zero;
use serde::Serialize;

use super::polytope::{minkowski_sum, RationalPolytope};
use crate::error::{Error, Result};
use crate::limits;
use crate::num::{factorial, rat_from_int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetVolume {
    pub subset: Vec<usize>,
    #[serde(with = "crate::num::serde_str::rational")]
    pub volume: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedVolumeReport {
    pub bodies: Vec<RationalPolytope>,
    #[serde(with = "crate::num::serde_str::rational")]
    pub value: Rat,
    pub subset_volumes: Vec<SubsetVolume>,
}

/// Mixed volume of `n` bodies in `R^n` by polarization over all nonempty subsets.
pub fn mixed_volume(bodies: &[RationalPolytope]) -> Result<MixedVolumeReport> {
    let Some(first) = bodies.first() else {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    };
    let n = first.ambient_dim();
    limits::check_dim(n)?;
    if let Some(b) = bodies.iter().find(|b| b.ambient_dim() != n) {
        return Err(Error::DimMismatch { expected: n, got: b.ambient_dim() });
    }
    if bodies.len() != n {
        return Err(Error::ArityMismatch { expected: n, got: bodies.len() });
    }
    let mut total = Rat::zero();
    let mut subset_volumes = Vec::with_capacity((1 << n) - 1);
    for mask in 1usize..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut sum = bodies[subset[0]].clone();
        for &i in &subset[1..] {
            sum = minkowski_sum(&sum, &bodies[i])?;
        }
        let volume = sum.volume();
        if (n - subset.len()).is_multiple_of(2) {
            total += &volume;
        } else {
            total -= &volume;
        }
        subset_volumes.push(SubsetVolume { subset, volume });
    }
    let value = total / rat_from_int(&factorial(n));
    Ok(MixedVolumeReport { bodies: bodies.to_vec(), value, subset_volumes })
}

/// Shorthand for the value of [`mixed_volume`].
pub fn mixed_volume_value(bodies: &[RationalPolytope]) -> Result<Rat> {
    mixed_volume(bodies).map(|r| r.value)
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
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(mixed_volume_value(&[sq.clone(), sq.clone()]).unwrap(), rat_int(1));
        assert_eq!(mixed_volume_value(&[sq.clone(), tri.clone()]).unwrap(), rat_int(1));
        let e1 = poly(&[&[0, 0], &[1, 0]]);
        let e2 = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(mixed_volume_value(&[e1, e2]).unwrap(), rat(1, 2));
        assert_eq!(mixed_volume_value(&[tri.clone(), tri]).unwrap(), rat(1, 2));
    }

    #[test]
    fn arity_checked() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(mixed_volume(std::slice::from_ref(&sq)), Err(Error::ArityMismatch { expected: 2, got: 1 })));
        assert!(matches!(mixed_volume(&[sq.clone(), sq.clone(), sq]), Err(Error::ArityMismatch { .. })));
    }
}
