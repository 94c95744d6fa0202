//! Lattice coordinates on a rational affine subspace.

use num_traits::{One, Zero};

use crate::linalg::matrix::{integer_kernel, pivot_columns, IntMatrix};
use crate::linalg::rational::{self, QMatrix};
use crate::linalg::saturation;
use crate::num::{primitive_direction, rat_from_int, Int, Rat};

/// Affine chart `x = origin + sum_i c_i b_i` where the `b_i` form a basis of
/// the integer points of the direction space. Euclidean volume in the `c`
/// coordinates is therefore the integral volume on the subspace.
#[derive(Clone, Debug)]
pub struct Frame {
    pub origin: Vec<Rat>,
    pub basis: Vec<Vec<Int>>,
    pub normals: Vec<Vec<Int>>,
    pivots: Vec<usize>,
    // c = inv * (x - origin)[pivots]
    inv: QMatrix,
}

impl Frame {
    /// Frame of the affine hull of `points` (nonempty), anchored at `points[0]`.
    pub fn affine(points: &[Vec<Rat>]) -> Frame {
        let origin = points[0].clone();
        let dirs: Vec<Vec<Int>> = points[1..]
            .iter()
            .map(|p| primitive_direction(&rational::sub(p, &origin)))
            .collect();
        Self::build(origin, &dirs)
    }

    /// Frame of the linear span of `vectors` (anchored at the origin).
    pub fn linear(ambient_dim: usize, vectors: &[Vec<Int>]) -> Frame {
        Self::build(vec![Rat::zero(); ambient_dim], vectors)
    }

    fn build(origin: Vec<Rat>, dirs: &[Vec<Int>]) -> Frame {
        let n = origin.len();
        let lat = saturation(n, dirs);
        let basis = lat.basis().to_vec();
        let k = basis.len();
        let pivots = pivot_columns(&IntMatrix::from_rows(n, basis.clone()));
        // Solve B_P^T c = d_P for the unit vectors to get the inverse.
        let bpt: QMatrix = (0..k).map(|i| (0..k).map(|j| rat_from_int(&basis[j][pivots[i]])).collect()).collect();
        let mut inv_cols: QMatrix = Vec::with_capacity(k);
        for j in 0..k {
            let mut e = vec![Rat::zero(); k];
            e[j] = Rat::one();
            inv_cols.push(rational::solve(&bpt, &e, k).expect("pivot block is invertible"));
        }
        let inv: QMatrix = (0..k).map(|i| (0..k).map(|j| inv_cols[j][i].clone()).collect()).collect();
        let normals = if k == 0 {
            IntMatrix::identity(n).to_rows()
        } else {
            integer_kernel(&IntMatrix::from_rows(n, basis.clone()))
        };
        Frame { origin, basis, normals, pivots, inv }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.len()
    }

    /// Chart coordinates of a point assumed to lie on the subspace.
    pub fn coords(&self, x: &[Rat]) -> Vec<Rat> {
        let d: Vec<Rat> = self.pivots.iter().map(|&p| &x[p] - &self.origin[p]).collect();
        self.inv.iter().map(|row| rational::dot(row, &d)).collect()
    }

    pub fn to_ambient(&self, c: &[Rat]) -> Vec<Rat> {
        let mut x = self.origin.clone();
        for (ci, b) in c.iter().zip(&self.basis) {
            for (xj, bj) in x.iter_mut().zip(b) {
                *xj += ci * rat_from_int(bj);
            }
        }
        x
    }

    pub fn on_subspace(&self, x: &[Rat]) -> bool {
        self.normals.iter().all(|nu| {
            let v: Vec<Rat> = nu.iter().map(rat_from_int).collect();
            rational::dot(&v, x) == rational::dot(&v, &self.origin)
        })
    }

    /// Ambient vector `w` with `<w, x - origin> = <a, coords(x)>` on the subspace.
    pub fn lift_functional(&self, a: &[Rat]) -> Vec<Rat> {
        let k = self.dim();
        let mut w = vec![Rat::zero(); self.ambient_dim()];
        for (j, &p) in self.pivots.iter().enumerate() {
            w[p] = (0..k).fold(Rat::zero(), |acc, i| acc + &self.inv[i][j] * &a[i]);
        }
        w
    }

    /// Orthogonal projection of `w` onto the direction space.
    pub fn project_direction(&self, w: &[Rat]) -> Vec<Rat> {
        let b = rational::to_rational(&self.basis);
        let k = b.len();
        if k == 0 {
            return vec![Rat::zero(); w.len()];
        }
        let gram: QMatrix = b.iter().map(|x| b.iter().map(|y| rational::dot(x, y)).collect()).collect();
        let rhs: Vec<Rat> = b.iter().map(|x| rational::dot(x, w)).collect();
        let coef = rational::solve(&gram, &rhs, k).expect("gram matrix is invertible");
        let mut out = vec![Rat::zero(); w.len()];
        for (c, x) in coef.iter().zip(&b) {
            for (o, xj) in out.iter_mut().zip(x) {
                *o += c * xj;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    fn q(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect()
    }

    #[test]
    fn diagonal_segment_chart() {
        let f = Frame::affine(&q(&[&[0, 0], &[2, 2]]));
        assert_eq!(f.dim(), 1);
        assert_eq!(f.coords(&[rat_int(2), rat_int(2)]), vec![rat_int(2)]);
        assert_eq!(f.to_ambient(&[rat(1, 2)]), vec![rat(1, 2), rat(1, 2)]);
        assert!(f.on_subspace(&[rat_int(5), rat_int(5)]));
        assert!(!f.on_subspace(&[rat_int(5), rat_int(4)]));
    }

    #[test]
    fn lifted_functional_agrees_on_subspace() {
        let f = Frame::affine(&q(&[&[1, 0, 1], &[3, 1, 1], &[1, 2, 1]]));
        assert_eq!(f.dim(), 2);
        let a = vec![rat_int(3), rat(-1, 2)];
        let w = f.lift_functional(&a);
        let x = vec![rat_int(4), rat_int(7), rat_int(1)];
        let lhs = rational::dot(&w, &rational::sub(&x, &f.origin));
        assert_eq!(lhs, rational::dot(&a, &f.coords(&x)));
        assert_eq!(f.to_ambient(&f.coords(&x)), x);
    }
}
