use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{hnf, integer_kernel, pivot_columns, IntMatrix};
use super::rational::{self, QMatrix};
use crate::error::{Error, Result};
use crate::num::{int, rat_from_int, Int, Rat};

/// A subgroup of `Z^n` stored by its canonical Hermite basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lattice {
    ambient_dim: usize,
    #[serde(with = "crate::num::serde_str::integer_mat")]
    basis: Vec<Vec<Int>>,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self.basis.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        write!(f, "Lattice(n={}, {rows:?})", self.ambient_dim)
    }
}

/// Index of a sublattice: finite, or infinite when the rank drops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Index {
    Finite(#[serde(with = "crate::num::serde_str::integer")] Int),
    Infinite,
}

impl Index {
    pub fn finite(&self) -> Option<&Int> {
        match self {
            Index::Finite(v) => Some(v),
            Index::Infinite => None,
        }
    }
}

impl Lattice {
    /// Lattice spanned by the rows of `generators`, put into canonical form.
    pub fn from_generators(ambient_dim: usize, generators: &[Vec<Int>]) -> Lattice {
        let m = IntMatrix::from_rows(ambient_dim, generators.to_vec());
        let (h, _) = hnf(&m);
        let basis = h.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        Lattice { ambient_dim, basis }
    }

    pub fn from_i64(ambient_dim: usize, generators: &[Vec<i64>]) -> Lattice {
        let g: Vec<Vec<Int>> = generators.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_generators(ambient_dim, &g)
    }

    pub fn full(ambient_dim: usize) -> Lattice {
        Lattice { ambient_dim, basis: IntMatrix::identity(ambient_dim).to_rows() }
    }

    pub fn zero(ambient_dim: usize) -> Lattice {
        Lattice { ambient_dim, basis: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    pub fn rational_basis(&self) -> QMatrix {
        rational::to_rational(&self.basis)
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` is in the lattice.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let c = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            if rest[..c].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (q, r) = rest[c].div_rem(&row[c]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        let w: Vec<Int> = v.iter().map(|&x| int(x)).collect();
        self.contains(&w)
    }

    /// Whether `v` lies in the real span of the lattice.
    pub fn spans(&self, v: &[Rat]) -> bool {
        rational::coordinates(&self.rational_basis(), v).is_some()
    }

    /// Saturation: all integer points of the rational span.
    pub fn saturation(&self) -> Lattice {
        saturation_of(self.ambient_dim, &self.basis)
    }

    /// Intersection with the coordinate hyperplane `x[coord] = 0`.
    pub fn slice_zero(&self, coord: usize) -> Lattice {
        let n = self.ambient_dim;
        // Reorder so `coord` is the first column; the Hermite form then has at most
        // one row touching it and the remaining rows span the slice.
        let perm: Vec<usize> = std::iter::once(coord).chain((0..n).filter(|&j| j != coord)).collect();
        let permuted: Vec<Vec<Int>> = self.basis.iter().map(|r| perm.iter().map(|&j| r[j].clone()).collect()).collect();
        let m = IntMatrix::from_rows(n, permuted);
        let (h, _) = hnf(&m);
        let rows: Vec<Vec<Int>> = h
            .to_rows()
            .into_iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()) && r[0].is_zero())
            .map(|r| {
                let mut back = vec![Int::zero(); n];
                for (k, &j) in perm.iter().enumerate() {
                    back[j] = r[k].clone();
                }
                back
            })
            .collect();
        Lattice::from_generators(n, &rows)
    }

    /// Generator of the image of the lattice under the coordinate projection
    /// `x -> x[coord]`: the non-negative gcd of that column.
    pub fn coordinate_gcd(&self, coord: usize) -> Int {
        self.basis.iter().fold(Int::zero(), |acc, r| acc.gcd(&r[coord]))
    }
}

/// Subgroup of `Z^n` generated by the given points.
pub fn group_generated(ambient_dim: usize, points: &[Vec<Int>]) -> Lattice {
    Lattice::from_generators(ambient_dim, points)
}

/// Lattice of all integer points in the rational span of the given points.
pub fn saturation(ambient_dim: usize, points: &[Vec<Int>]) -> Lattice {
    saturation_of(ambient_dim, points)
}

fn saturation_of(n: usize, points: &[Vec<Int>]) -> Lattice {
    let nonzero: Vec<Vec<Int>> = points.iter().filter(|p| p.iter().any(|x| !x.is_zero())).cloned().collect();
    if nonzero.is_empty() {
        return Lattice::zero(n);
    }
    let normals = integer_kernel(&IntMatrix::from_rows(n, nonzero));
    if normals.is_empty() {
        return Lattice::full(n);
    }
    let sat = integer_kernel(&IntMatrix::from_rows(n, normals));
    Lattice::from_generators(n, &sat)
}

/// `[sup : sub]`, finite exactly when the ranks agree.
pub fn subgroup_index(sub: &Lattice, sup: &Lattice) -> Result<Index> {
    if sub.ambient_dim != sup.ambient_dim {
        return Err(Error::DimMismatch { expected: sup.ambient_dim, got: sub.ambient_dim });
    }
    let sup_basis = sup.rational_basis();
    let mut change: QMatrix = Vec::with_capacity(sub.rank());
    for v in sub.rational_basis() {
        match rational::coordinates(&sup_basis, &v) {
            Some(c) => change.push(c),
            None => return Err(Error::SpanMismatch("sub is not contained in the span of sup".into())),
        }
    }
    if sub.rank() < sup.rank() {
        return Ok(Index::Infinite);
    }
    if change.iter().flatten().any(|c| !c.is_integer()) {
        return Err(Error::SpanMismatch("sub is not a sublattice of sup".into()));
    }
    let det = rational::determinant(&change);
    Ok(Index::Finite(det.to_integer().abs()))
}

/// Some integer `k` with `sum_i k_i a_i = b` where `a_i` are the columns of `a`.
pub fn solve_integer(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.rows(), b.len());
    let gens = a.transpose();
    let (h, u) = hnf(&gens);
    let pivots = pivot_columns(&h);
    let mut rest = b.to_vec();
    let mut y = vec![Int::zero(); h.rows()];
    for (i, &c) in pivots.iter().enumerate() {
        if rest[..c].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let (q, r) = rest[c].div_rem(&h[(i, c)]);
        if !r.is_zero() {
            return None;
        }
        for (x, hv) in rest.iter_mut().zip(h.row(i)) {
            *x -= &q * hv;
        }
        y[i] = q;
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return None;
    }
    // k^T = y^T u
    let k = (0..u.cols())
        .map(|j| (0..u.rows()).fold(Int::zero(), |acc, i| acc + &y[i] * &u[(i, j)]))
        .collect();
    Some(k)
}

/// Integral linear functional with prescribed kernel, normalized to map the lattice onto `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelFunctional {
    #[serde(with = "crate::num::serde_str::rational_vec")]
    pub coefficients: Vec<Rat>,
}

impl LevelFunctional {
    pub fn eval(&self, v: &[Int]) -> Rat {
        self.coefficients.iter().zip(v).fold(Rat::zero(), |acc, (c, x)| acc + c * rat_from_int(x))
    }

    pub fn eval_rational(&self, v: &[Rat]) -> Rat {
        rational::dot(&self.coefficients, v)
    }
}

/// The functional vanishing on `boundary`, taking the value set `Z` on `lattice`,
/// and positive on `positive_side`. The functional is chosen inside the span of
/// `lattice` so that it is unique.
pub fn level_functional(lattice: &Lattice, boundary: &Lattice, positive_side: &[Int]) -> Result<LevelFunctional> {
    let lb = lattice.rational_basis();
    for v in boundary.rational_basis() {
        if rational::coordinates(&lb, &v).is_none() {
            return Err(Error::SpanMismatch("boundary is not inside the lattice span".into()));
        }
    }
    let corank = lattice.rank() - boundary.rank();
    if corank != 1 {
        return Err(Error::BadCorank { corank });
    }
    let bb = boundary.rational_basis();
    let gram: QMatrix = bb.iter().map(|b| lb.iter().map(|l| rational::dot(l, b)).collect()).collect();
    let ns = rational::nullspace(&gram, lb.len());
    let c = &ns[0];
    let n = lattice.ambient_dim();
    let mut w = vec![Rat::zero(); n];
    for (ci, l) in c.iter().zip(&lb) {
        for (wj, lj) in w.iter_mut().zip(l) {
            *wj += ci * lj;
        }
    }
    // Divide by the generator of the value group.
    let values: Vec<Rat> = lb.iter().map(|l| rational::dot(&w, l)).collect();
    let num_gcd = values.iter().fold(Int::zero(), |acc, v| acc.gcd(v.numer()));
    let den_lcm = values.iter().fold(Int::one(), |acc, v| acc.lcm(v.denom()));
    let g = Rat::new(num_gcd, den_lcm);
    let mut w: Vec<Rat> = w.iter().map(|x| x / &g).collect();
    let side: Vec<Rat> = positive_side.iter().map(rat_from_int).collect();
    let s = rational::dot(&w, &side);
    if s.is_zero() {
        return Err(Error::Input("orientation vector lies on the boundary".into()));
    }
    if s.is_negative() {
        w.iter_mut().for_each(|x| *x = -x.clone());
    }
    Ok(LevelFunctional { coefficients: w })
}
