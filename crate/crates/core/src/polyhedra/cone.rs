use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dd;
use super::frame::Frame;
use crate::linalg::{saturation, Lattice};
use crate::num::{primitive_direction, rat_from_int, Int, Rat};

#[derive(Clone, Debug)]
struct Faces {
    frame: Frame,
    facets: Vec<Vec<Int>>,
    ridge: Lattice,
}

/// Closed convex cone with apex at the origin, the nonnegative hull of
/// finitely many integer generators.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalCone {
    ambient_dim: usize,
    #[serde(with = "crate::num::serde_str::integer_mat")]
    ray_generators: Vec<Vec<Int>>,
    #[serde(skip)]
    faces: OnceLock<Faces>,
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.ray_generators == other.ray_generators
    }
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).fold(Int::zero(), |acc, (x, y)| acc + x * y)
}

impl RationalCone {
    pub fn new(ambient_dim: usize, ray_generators: Vec<Vec<Int>>) -> RationalCone {
        RationalCone { ambient_dim, ray_generators, faces: OnceLock::new() }
    }

    pub fn from_i64(ambient_dim: usize, gens: &[Vec<i64>]) -> RationalCone {
        Self::new(ambient_dim, gens.iter().map(|g| g.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn ray_generators(&self) -> &[Vec<Int>] {
        &self.ray_generators
    }

    fn faces(&self) -> &Faces {
        self.faces.get_or_init(|| {
            let frame = Frame::linear(self.ambient_dim, &self.ray_generators);
            let k = frame.dim();
            let facets: Vec<Vec<Int>> = if k == 0 {
                Vec::new()
            } else {
                let rows: Vec<Vec<Int>> = self
                    .ray_generators
                    .iter()
                    .map(|g| {
                        let x: Vec<Rat> = g.iter().map(rat_from_int).collect();
                        frame.coords(&x).iter().map(|c| c.to_integer()).collect()
                    })
                    .collect();
                let mut f: Vec<Vec<Int>> = dd::extreme_rays(&rows, k)
                    .into_iter()
                    .map(|r| {
                        let a: Vec<Rat> = r.direction.iter().map(rat_from_int).collect();
                        primitive_direction(&frame.lift_functional(&a))
                    })
                    .collect();
                f.sort();
                f
            };
            let on_ridge: Vec<Vec<Int>> = self
                .ray_generators
                .iter()
                .filter(|g| facets.iter().all(|a| dot(a, g).is_zero()))
                .cloned()
                .collect();
            let ridge = saturation(self.ambient_dim, &on_ridge);
            Faces { frame, facets, ridge }
        })
    }

    /// Inward facet normals `a` (so `<a, x> >= 0` on the cone), primitive, valid on the span.
    pub fn facet_normals(&self) -> &[Vec<Int>] {
        &self.faces().facets
    }

    /// Integer normals of the linear span (`<nu, x> = 0` on the cone).
    pub fn span_equations(&self) -> &[Vec<Int>] {
        &self.faces().frame.normals
    }

    pub fn span_frame(&self) -> &Frame {
        &self.faces().frame
    }

    pub fn dim(&self) -> usize {
        self.faces().frame.dim()
    }

    /// Largest linear subspace contained in the cone.
    pub fn ridge(&self) -> &Lattice {
        &self.faces().ridge
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.ridge().rank() == 0
    }

    pub fn in_span(&self, x: &[Rat]) -> bool {
        self.span_equations()
            .iter()
            .all(|nu| nu.iter().zip(x).fold(Rat::zero(), |acc, (a, b)| acc + rat_from_int(a) * b).is_zero())
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.in_span(x) && self.facet_normals().iter().all(|a| !eval(a, x).is_negative())
    }

    pub fn contains_int(&self, x: &[Int]) -> bool {
        let q: Vec<Rat> = x.iter().map(rat_from_int).collect();
        self.contains(&q)
    }

    /// Relative interior: in the span and strictly inside every facet.
    pub fn in_relative_interior(&self, x: &[Rat]) -> bool {
        self.in_span(x) && self.facet_normals().iter().all(|a| eval(a, x).is_positive())
    }

    /// An integer functional positive on every nonzero point of a strictly convex cone.
    pub fn positive_grading(&self) -> Option<Vec<Int>> {
        if !self.is_strictly_convex() || self.dim() == 0 {
            return None;
        }
        let mut w = vec![Int::zero(); self.ambient_dim];
        for a in self.facet_normals() {
            for (wi, ai) in w.iter_mut().zip(a) {
                *wi += ai;
            }
        }
        Some(w)
    }
}

fn eval(a: &[Int], x: &[Rat]) -> Rat {
    a.iter().zip(x).fold(Rat::zero(), |acc, (ai, xi)| acc + rat_from_int(ai) * xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat_int};

    fn q(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn quadrant_cone() {
        let c = RationalCone::from_i64(2, &[vec![1, 1], vec![2, 1]]);
        assert_eq!(c.facet_normals().len(), 2);
        assert!(c.contains(&q(&[3, 2])));
        assert!(!c.contains(&q(&[3, 1])));
        assert!(c.is_strictly_convex());
        assert!(c.in_relative_interior(&q(&[3, 2])));
        assert!(!c.in_relative_interior(&q(&[2, 2])));
        let w = c.positive_grading().unwrap();
        assert!(dot(&w, &[int(1), int(1)]).is_positive());
    }

    #[test]
    fn ridge_of_half_plane() {
        let c = RationalCone::from_i64(2, &[vec![1, 0], vec![-1, 0], vec![0, 1]]);
        assert!(!c.is_strictly_convex());
        assert_eq!(c.ridge().basis(), &[vec![int(1), int(0)]]);
        assert_eq!(c.facet_normals(), &[vec![int(0), int(1)]]);
    }

    #[test]
    fn lower_dimensional_cone() {
        let c = RationalCone::from_i64(3, &[vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&q(&[1, 1, 2])));
        assert!(!c.contains(&q(&[1, 1, 1])));
        assert!(!c.contains(&q(&[-1, 2, 1])));
    }

    #[test]
    fn whole_line() {
        let c = RationalCone::from_i64(1, &[vec![2], vec![-3]]);
        assert!(c.facet_normals().is_empty());
        assert_eq!(c.ridge().rank(), 1);
        assert!(c.contains(&q(&[-7])));
    }
}
