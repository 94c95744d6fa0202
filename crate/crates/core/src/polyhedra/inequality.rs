use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use super::mixed::mixed_volume_value;
use super::polytope::{minkowski_sum, RationalPolytope};
use crate::error::{Error, Result};
use crate::num::{compare_root_sums, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InequalityMode {
    /// `Vol(P)^(1/n) + Vol(Q)^(1/n) <= Vol(P + Q)^(1/n)`.
    Bm,
    /// `Area(P) Area(Q) <= V(P, Q)^2` in the plane.
    Hodge2d,
    /// `V(D1, D1, rest) V(D2, D2, rest) <= V(D1, D2, rest)^2`.
    Af,
    /// Product form with body `j` repeated `partition[j]` times.
    AfCorollary { partition: Vec<usize> },
    /// Concavity of `V(m*D, rest)^(1/m)` under Minkowski addition.
    GeneralizedBm { m: usize },
}

impl fmt::Display for InequalityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InequalityMode::Bm => write!(f, "BM"),
            InequalityMode::Hodge2d => write!(f, "HODGE2D"),
            InequalityMode::Af => write!(f, "AF"),
            InequalityMode::AfCorollary { partition } => write!(f, "AF_COROLLARY{partition:?}"),
            InequalityMode::GeneralizedBm { m } => write!(f, "GENERALIZED_BM[{m}]"),
        }
    }
}

/// A side of the form `sum_i terms[i]^(1/root)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Side {
    #[serde(with = "crate::num::serde_str::rational_vec")]
    pub terms: Vec<Rat>,
    pub root: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub mode: String,
    pub lhs: Side,
    pub rhs: Side,
    pub holds: bool,
    pub equality: bool,
}

fn repeated(bodies: &[(&RationalPolytope, usize)], rest: &[RationalPolytope]) -> Vec<RationalPolytope> {
    let mut out: Vec<RationalPolytope> = Vec::new();
    for (b, k) in bodies {
        out.extend(std::iter::repeat_n((*b).clone(), *k));
    }
    out.extend(rest.iter().cloned());
    out
}

fn arity(expected: usize, got: usize) -> Error {
    Error::ArityMismatch { expected, got }
}

/// Evaluates both sides exactly; roots are compared without extracting them.
pub fn check_inequalities(bodies: &[RationalPolytope], mode: &InequalityMode) -> Result<InequalityReport> {
    let n = bodies.first().map_or(0, |b| b.ambient_dim());
    if let Some(b) = bodies.iter().find(|b| b.ambient_dim() != n) {
        return Err(Error::DimMismatch { expected: n, got: b.ambient_dim() });
    }
    let (lhs, rhs) = match mode {
        InequalityMode::Bm => {
            if bodies.len() != 2 {
                return Err(arity(2, bodies.len()));
            }
            let sum = minkowski_sum(&bodies[0], &bodies[1])?;
            let root = n as u32;
            (
                Side { terms: vec![bodies[0].volume(), bodies[1].volume()], root },
                Side { terms: vec![sum.volume()], root },
            )
        }
        InequalityMode::Hodge2d => {
            if n != 2 {
                return Err(Error::DimMismatch { expected: 2, got: n });
            }
            if bodies.len() != 2 {
                return Err(arity(2, bodies.len()));
            }
            let v = mixed_volume_value(bodies)?;
            (
                Side { terms: vec![bodies[0].volume() * bodies[1].volume()], root: 1 },
                Side { terms: vec![&v * &v], root: 1 },
            )
        }
        InequalityMode::Af => {
            if n < 2 || bodies.len() != n {
                return Err(arity(n.max(2), bodies.len()));
            }
            let rest = &bodies[2..];
            let a = mixed_volume_value(&repeated(&[(&bodies[0], 2)], rest))?;
            let b = mixed_volume_value(&repeated(&[(&bodies[1], 2)], rest))?;
            let c = mixed_volume_value(bodies)?;
            (Side { terms: vec![a * b], root: 1 }, Side { terms: vec![&c * &c], root: 1 })
        }
        InequalityMode::AfCorollary { partition } => {
            let r = partition.len();
            let m: usize = partition.iter().sum();
            if partition.contains(&0) || m < 2 || m > n {
                return Err(Error::Input(format!("partition {partition:?} must have positive parts summing to 2..={n}")));
            }
            let expected = r + n - m;
            if bodies.len() != expected {
                return Err(arity(expected, bodies.len()));
            }
            let rest = &bodies[r..];
            let mut lhs = Rat::one();
            for (j, &k) in partition.iter().enumerate() {
                let v = mixed_volume_value(&repeated(&[(&bodies[j], m)], rest))?;
                lhs *= num_traits::pow(v, k);
            }
            let pairs: Vec<(&RationalPolytope, usize)> = bodies[..r].iter().zip(partition.iter().copied()).collect();
            let v = mixed_volume_value(&repeated(&pairs, rest))?;
            (Side { terms: vec![lhs], root: 1 }, Side { terms: vec![num_traits::pow(v, m)], root: 1 })
        }
        InequalityMode::GeneralizedBm { m } => {
            let m = *m;
            if m == 0 || m > n {
                return Err(Error::Input(format!("m = {m} must lie in 1..={n}")));
            }
            let expected = 2 + n - m;
            if bodies.len() != expected {
                return Err(arity(expected, bodies.len()));
            }
            let rest = &bodies[2..];
            let sum = minkowski_sum(&bodies[0], &bodies[1])?;
            let f = |d: &RationalPolytope| mixed_volume_value(&repeated(&[(d, m)], rest));
            let root = m as u32;
            (
                Side { terms: vec![f(&bodies[0])?, f(&bodies[1])?], root },
                Side { terms: vec![f(&sum)?], root },
            )
        }
    };
    let ord = if lhs.root == 1 {
        lhs.terms[0].cmp(&rhs.terms[0])
    } else {
        compare_root_sums(&lhs.terms, &rhs.terms, lhs.root)
    };
    Ok(InequalityReport {
        mode: mode.to_string(),
        holds: ord != Ordering::Greater,
        equality: ord == Ordering::Equal,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};
    use crate::polyhedra::convex_hull_i64;

    fn poly(v: &[&[i64]]) -> RationalPolytope {
        convex_hull_i64(&v.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn square() -> RationalPolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn triangle() -> RationalPolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1]])
    }

    #[test]
    fn bm_equality_for_equal_squares() {
        let r = check_inequalities(&[square(), square()], &InequalityMode::Bm).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!(r.rhs.terms, vec![rat_int(4)]);
    }

    #[test]
    fn bm_square_triangle_is_strict() {
        let r = check_inequalities(&[square(), triangle()], &InequalityMode::Bm).unwrap();
        assert!(r.holds && !r.equality);
        assert_eq!(r.rhs.terms, vec![rat(7, 2)]);
    }

    #[test]
    fn hodge_square_triangle() {
        let r = check_inequalities(&[square(), triangle()], &InequalityMode::Hodge2d).unwrap();
        assert_eq!(r.lhs.terms, vec![rat(1, 2)]);
        assert_eq!(r.rhs.terms, vec![rat_int(1)]);
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn af_unit_cube() {
        let c = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let r = check_inequalities(&[c.clone(), c.clone(), c.clone()], &InequalityMode::Af).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!(r.lhs.terms, vec![rat_int(1)]);
        let g = check_inequalities(&[c.clone(), c.clone(), c.clone()], &InequalityMode::GeneralizedBm { m: 2 }).unwrap();
        assert!(g.holds);
        let k = check_inequalities(&[c.clone(), c], &InequalityMode::AfCorollary { partition: vec![2, 1] }).unwrap();
        assert!(k.holds && k.equality);
    }

    #[test]
    fn arity_errors() {
        assert!(matches!(check_inequalities(&[square()], &InequalityMode::Bm), Err(Error::ArityMismatch { .. })));
        assert!(check_inequalities(&[square(), square(), square()], &InequalityMode::Af).is_err());
    }
}
