//! Double description: extreme rays of a pointed cone `{y : A y >= 0}`.
//!
//! Constraints are inserted one at a time; new rays are formed only from
//! adjacent pairs, with adjacency decided combinatorially on zero sets.

use num_traits::{Signed, Zero};

use crate::linalg::rational::{self, QMatrix};
use crate::num::{primitive, primitive_direction, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

/// An extreme ray together with the indices of the constraints it makes tight.
#[derive(Clone, Debug)]
pub struct Ray {
    pub direction: Vec<Int>,
    pub tight: Vec<usize>,
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).fold(Int::zero(), |acc, (x, y)| acc + x * y)
}

/// Extreme rays of `{y in R^m : row . y >= 0 for every row}`.
///
/// The rows must have rank `m` (the cone is then pointed); the result is
/// empty exactly when the cone is `{0}`.
pub fn extreme_rays(rows: &[Vec<Int>], m: usize) -> Vec<Ray> {
    assert!(m >= 1);
    let total = rows.len();

    // Greedy choice of m independent rows.
    let mut basis_idx: Vec<usize> = Vec::with_capacity(m);
    let mut basis_q: QMatrix = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        let mut trial = basis_q.clone();
        trial.push(rational::to_rational(std::slice::from_ref(row)).remove(0));
        if rational::rank(&trial) == trial.len() {
            basis_q = trial;
            basis_idx.push(i);
            if basis_idx.len() == m {
                break;
            }
        }
    }
    assert_eq!(basis_idx.len(), m, "constraint matrix must have full column rank");

    // Rays of the simplicial start cone are the columns of the inverse.
    let mut rays: Vec<(Vec<Int>, Bits)> = Vec::with_capacity(m);
    for j in 0..m {
        let mut e = vec![Rat::zero(); m];
        e[j] = Rat::from_integer(1.into());
        let col = rational::solve(&basis_q, &e, m).expect("basis is invertible");
        let dir = primitive_direction(&col);
        let mut z = Bits::new(total);
        for (k, &bi) in basis_idx.iter().enumerate() {
            if k != j {
                z.set(bi);
            }
        }
        rays.push((dir, z));
    }

    let mut in_basis = vec![false; total];
    for &b in &basis_idx {
        in_basis[b] = true;
    }

    for (i, row) in rows.iter().enumerate() {
        if in_basis[i] {
            continue;
        }
        let values: Vec<Int> = rays.iter().map(|(d, _)| dot(row, d)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for ((_, z), v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    z.set(i);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&r| values[r].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&r| values[r].is_negative()).collect();
        let mut fresh: Vec<(Vec<Int>, Bits)> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.and(&rays[q].1);
                if common.count() + 2 < m {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|r| r == p || r == q || !common.subset_of(&rays[r].1));
                if !adjacent {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let dir: Vec<Int> = rays[q].0.iter().zip(&rays[p].0).map(|(a, b)| vp * a + &vq * b).collect();
                let mut z = common;
                z.set(i);
                fresh.push((primitive(&dir), z));
            }
        }
        let mut next: Vec<(Vec<Int>, Bits)> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, (d, mut z)) in rays.into_iter().enumerate() {
            if values[r].is_negative() {
                continue;
            }
            if values[r].is_zero() {
                z.set(i);
            }
            next.push((d, z));
        }
        next.extend(fresh);
        rays = next;
    }

    rays.into_iter()
        .map(|(direction, z)| Ray { direction, tight: (0..total).filter(|&i| z.get(i)).collect() })
        .collect()
}
