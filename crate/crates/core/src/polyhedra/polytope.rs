use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::dd;
use super::frame::Frame;
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg::rational;
use crate::num::{common_denominator, factorial, format_rational, primitive_direction, rat_from_int, rat_int, Int, Rat};

/// Half-space description: `<a, x> = b` for equations, `<a, x> <= b` for facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub equations: Vec<Inequality>,
    pub facets: Vec<Inequality>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    #[serde(with = "crate::num::serde_str::rational_vec")]
    pub normal: Vec<Rat>,
    #[serde(with = "crate::num::serde_str::rational")]
    pub offset: Rat,
}

/// A convex polytope with rational vertices, in canonical V-representation:
/// irredundant vertices, deduplicated and sorted lexicographically.
#[derive(Clone)]
pub struct RationalPolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Rat>>,
    dim: usize,
    hrep: OnceLock<HRep>,
}

impl PartialEq for RationalPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for RationalPolytope {}

impl fmt::Debug for RationalPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<Vec<String>> = self.vertices.iter().map(|p| p.iter().map(format_rational).collect()).collect();
        write!(f, "Polytope(dim {} in R^{}, {:?})", self.dim, self.ambient_dim, v)
    }
}

impl fmt::Display for RationalPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self
            .vertices
            .iter()
            .map(|p| format!("({})", p.iter().map(format_rational).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "conv{{{}}}", v.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    ambient_dim: usize,
    #[serde(with = "crate::num::serde_str::rational_mat")]
    vertices: Vec<Vec<Rat>>,
}

impl Serialize for RationalPolytope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson { ambient_dim: self.ambient_dim, vertices: self.vertices.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPolytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolytopeJson::deserialize(d)?;
        if j.vertices.iter().any(|v| v.len() != j.ambient_dim) {
            return Err(serde::de::Error::custom("vertex length differs from ambient_dim"));
        }
        convex_hull(&j.vertices).map_err(serde::de::Error::custom)
    }
}

pub(crate) struct Hull {
    pub frame: Frame,
    pub vertices: Vec<usize>,
    /// `(a, b, tight points)` with `<a, c> <= b` in chart coordinates.
    pub facets: Vec<(Vec<Rat>, Rat, Vec<usize>)>,
}

/// Hull of distinct points in their own affine hull.
pub(crate) fn hull_of(points: &[Vec<Rat>]) -> Hull {
    let frame = Frame::affine(points);
    let k = frame.dim();
    let coords: Vec<Vec<Rat>> = points.iter().map(|p| frame.coords(p)).collect();
    if k == 0 {
        return Hull { frame, vertices: vec![0], facets: Vec::new() };
    }
    let rows: Vec<Vec<Int>> = coords
        .iter()
        .map(|c| {
            let den = common_denominator(c);
            let mut row: Vec<Int> = c.iter().map(|x| -(x * rat_from_int(&den)).to_integer()).collect();
            row.push(den);
            row
        })
        .collect();
    let rays = dd::extreme_rays(&rows, k + 1);
    let facets: Vec<(Vec<Rat>, Rat, Vec<usize>)> = rays
        .into_iter()
        .map(|r| {
            let a: Vec<Rat> = r.direction[..k].iter().map(rat_from_int).collect();
            let b = rat_from_int(&r.direction[k]);
            (a, b, r.tight)
        })
        .collect();

    let words = facets.len().div_ceil(64).max(1);
    let mut incidence = vec![vec![0u64; words]; points.len()];
    for (f, (_, _, tight)) in facets.iter().enumerate() {
        for &p in tight {
            incidence[p][f / 64] |= 1 << (f % 64);
        }
    }
    let vertices = (0..points.len())
        .filter(|&p| {
            !(0..points.len()).any(|q| {
                q != p && incidence[p].iter().zip(&incidence[q]).all(|(a, b)| a & !b == 0)
            })
        })
        .collect();
    Hull { frame, vertices, facets }
}

fn lex_cmp(a: &[Rat], b: &[Rat]) -> Ordering {
    a.cmp(b)
}

/// Simplices (as index lists into `points`) triangulating the hull of
/// `points[idx]`: a fan from the lexicographically least vertex over the
/// triangulated facets that avoid it.
pub(crate) fn triangulate(points: &[Vec<Rat>], idx: &[usize]) -> Vec<Vec<usize>> {
    let sub: Vec<Vec<Rat>> = idx.iter().map(|&i| points[i].clone()).collect();
    let h = hull_of(&sub);
    if h.frame.dim() == 0 {
        return vec![vec![idx[0]]];
    }
    let apex = *h
        .vertices
        .iter()
        .min_by(|&&a, &&b| lex_cmp(&sub[a], &sub[b]))
        .expect("a polytope has vertices");
    let is_vertex: Vec<bool> = {
        let mut v = vec![false; sub.len()];
        for &i in &h.vertices {
            v[i] = true;
        }
        v
    };
    let mut out = Vec::new();
    for (_, _, tight) in &h.facets {
        if tight.contains(&apex) {
            continue;
        }
        let face: Vec<usize> = tight.iter().filter(|&&p| is_vertex[p]).map(|&p| idx[p]).collect();
        for mut s in triangulate(points, &face) {
            s.push(idx[apex]);
            out.push(s);
        }
    }
    out
}

/// Convex hull of a nonempty finite point set.
pub fn convex_hull(points: &[Vec<Rat>]) -> Result<RationalPolytope> {
    let Some(first) = points.first() else {
        return Err(Error::Empty("convex hull of no points".into()));
    };
    let n = first.len();
    limits::check_dim(n)?;
    if let Some(bad) = points.iter().find(|p| p.len() != n) {
        return Err(Error::DimMismatch { expected: n, got: bad.len() });
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let h = hull_of(&pts);
    let dim = h.frame.dim();
    let mut vertices: Vec<Vec<Rat>> = h.vertices.iter().map(|&i| pts[i].clone()).collect();
    vertices.sort();
    Ok(RationalPolytope { ambient_dim: n, vertices, dim, hrep: OnceLock::new() })
}

pub fn convex_hull_i64(points: &[Vec<i64>]) -> Result<RationalPolytope> {
    let q: Vec<Vec<Rat>> = points.iter().map(|p| p.iter().map(|&x| rat_int(x)).collect()).collect();
    convex_hull(&q)
}

/// Minkowski sum, the hull of all pairwise vertex sums.
pub fn minkowski_sum(p: &RationalPolytope, q: &RationalPolytope) -> Result<RationalPolytope> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimMismatch { expected: p.ambient_dim, got: q.ambient_dim });
    }
    let sums: Vec<Vec<Rat>> = p
        .vertices
        .iter()
        .flat_map(|a| q.vertices.iter().map(move |b| rational::add(a, b)))
        .collect();
    convex_hull(&sums)
}

pub fn integral_volume(p: &RationalPolytope) -> Rat {
    p.integral_volume()
}

impl RationalPolytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn point(p: Vec<Rat>) -> RationalPolytope {
        RationalPolytope { ambient_dim: p.len(), vertices: vec![p], dim: 0, hrep: OnceLock::new() }
    }

    pub fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| self.compute_hrep())
    }

    fn compute_hrep(&self) -> HRep {
        let h = hull_of(&self.vertices);
        let origin = h.frame.origin.clone();
        let mut equations: Vec<Inequality> = h
            .frame
            .normals
            .iter()
            .map(|nu| {
                let normal: Vec<Rat> = nu.iter().map(rat_from_int).collect();
                let offset = rational::dot(&normal, &origin);
                Inequality { normal, offset }
            })
            .collect();
        let mut facets: Vec<Inequality> = h
            .facets
            .iter()
            .map(|(a, b, _)| {
                let w = h.frame.lift_functional(a);
                let offset = b + rational::dot(&w, &origin);
                let mut v = w;
                v.push(offset);
                let prim = primitive_direction(&v);
                let offset = rat_from_int(&prim[self.ambient_dim]);
                Inequality { normal: prim[..self.ambient_dim].iter().map(rat_from_int).collect(), offset }
            })
            .collect();
        equations.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
        facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
        HRep { equations, facets }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        let h = self.hrep();
        h.equations.iter().all(|e| rational::dot(&e.normal, x) == e.offset)
            && h.facets.iter().all(|f| rational::dot(&f.normal, x) <= f.offset)
    }

    pub fn contains_i64(&self, x: &[i64]) -> bool {
        let q: Vec<Rat> = x.iter().map(|&v| rat_int(v)).collect();
        self.contains(&q)
    }

    pub fn contains_polytope(&self, other: &RationalPolytope) -> bool {
        other.vertices.iter().all(|v| self.contains(v))
    }

    /// Volume in the polytope's own dimension under the integral normalization:
    /// a primitive lattice parallelepiped of the affine hull has volume one.
    pub fn integral_volume(&self) -> Rat {
        if self.dim == 0 {
            return rat_int(1);
        }
        let frame = Frame::affine(&self.vertices);
        let coords: Vec<Vec<Rat>> = self.vertices.iter().map(|v| frame.coords(v)).collect();
        let idx: Vec<usize> = (0..self.vertices.len()).collect();
        let simplices = triangulate(&self.vertices, &idx);
        let total = simplices.iter().fold(Rat::zero(), |acc, s| {
            let base = &coords[s[0]];
            let m: Vec<Vec<Rat>> = s[1..].iter().map(|&i| rational::sub(&coords[i], base)).collect();
            acc + rational::determinant(&m).abs()
        });
        total / rat_from_int(&factorial(self.dim))
    }

    /// Euclidean volume in the ambient dimension; zero for lower-dimensional bodies.
    pub fn volume(&self) -> Rat {
        if self.is_full_dimensional() {
            self.integral_volume()
        } else {
            Rat::zero()
        }
    }

    /// Triangulation into simplices of the polytope's own dimension, as vertex lists.
    pub fn triangulation(&self) -> Vec<Vec<Vec<Rat>>> {
        let idx: Vec<usize> = (0..self.vertices.len()).collect();
        triangulate(&self.vertices, &idx)
            .into_iter()
            .map(|s| s.into_iter().map(|i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub fn scale(&self, factor: &Rat) -> RationalPolytope {
        let pts: Vec<Vec<Rat>> = self.vertices.iter().map(|v| rational::scale(v, factor)).collect();
        if factor.is_zero() {
            return RationalPolytope::point(pts[0].clone());
        }
        let mut vertices = pts;
        if factor.is_negative() {
            vertices.sort();
        }
        RationalPolytope { ambient_dim: self.ambient_dim, vertices, dim: self.dim, hrep: OnceLock::new() }
    }

    pub fn translate(&self, t: &[Rat]) -> RationalPolytope {
        let vertices = self.vertices.iter().map(|v| rational::add(v, t)).collect();
        RationalPolytope { ambient_dim: self.ambient_dim, vertices, dim: self.dim, hrep: OnceLock::new() }
    }

    /// Image under the coordinate projection keeping `coords`.
    pub fn project(&self, coords: &[usize]) -> Result<RationalPolytope> {
        let pts: Vec<Vec<Rat>> = self.vertices.iter().map(|v| coords.iter().map(|&c| v[c].clone()).collect()).collect();
        convex_hull(&pts)
    }

    /// Support function `max_{x in P} <u, x>`.
    pub fn support(&self, u: &[Rat]) -> Rat {
        self.vertices
            .iter()
            .map(|v| rational::dot(u, v))
            .max()
            .expect("a polytope has vertices")
    }

    /// Integer points of the polytope, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Vec<i64>> {
        let n = self.ambient_dim;
        let lo: Vec<i64> = (0..n)
            .map(|j| self.vertices.iter().map(|v| v[j].ceil().to_integer()).min().unwrap().to_i64().unwrap())
            .collect();
        let hi: Vec<i64> = (0..n)
            .map(|j| self.vertices.iter().map(|v| v[j].floor().to_integer()).max().unwrap().to_i64().unwrap())
            .collect();
        let mut out = Vec::new();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return out;
        }
        let mut cur = lo.clone();
        loop {
            if self.contains_i64(&cur) {
                out.push(cur.clone());
            }
            let mut j = n;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    for t in j + 1..n {
                        cur[t] = lo[t];
                    }
                    break;
                }
            }
            if n == 0 {
                return out;
            }
        }
    }

    /// Smallest common multiple of the vertex denominators.
    pub fn denominator(&self) -> Int {
        self.vertices.iter().fold(Int::from(1), |acc, v| acc.lcm(&common_denominator(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn poly(v: &[&[i64]]) -> RationalPolytope {
        convex_hull_i64(&v.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn unit_square() -> RationalPolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn triangle() -> RationalPolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1]])
    }

    /// Shoelace area of a convex polygon given its vertices in any order.
    fn shoelace(vertices: &[Vec<Rat>]) -> Rat {
        let cx: Rat = vertices.iter().map(|v| v[0].clone()).sum::<Rat>() / rat_int(vertices.len() as i64);
        let cy: Rat = vertices.iter().map(|v| v[1].clone()).sum::<Rat>() / rat_int(vertices.len() as i64);
        let mut vs = vertices.to_vec();
        // Sort by angle around the centroid using exact quadrant + cross product.
        vs.sort_by(|a, b| {
            let (ax, ay) = (&a[0] - &cx, &a[1] - &cy);
            let (bx, by) = (&b[0] - &cx, &b[1] - &cy);
            let half = |x: &Rat, y: &Rat| if y.is_negative() || (y.is_zero() && x.is_negative()) { 1 } else { 0 };
            half(&ax, &ay).cmp(&half(&bx, &by)).then_with(|| {
                let cross = &ax * &by - &ay * &bx;
                Rat::zero().cmp(&cross)
            })
        });
        let n = vs.len();
        let twice: Rat = (0..n).map(|i| &vs[i][0] * &vs[(i + 1) % n][1] - &vs[(i + 1) % n][0] * &vs[i][1]).sum();
        twice.abs() / rat_int(2)
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let p = convex_hull(&[
            vec![rat_int(0), rat_int(0)],
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
            vec![rat(1, 2), rat(1, 4)],
        ])
        .unwrap();
        assert_eq!(p, triangle());
        let s = poly(&[&[0, 0], &[1, 0], &[2, 0]]);
        assert_eq!(s.vertices(), &[vec![rat_int(0), rat_int(0)], vec![rat_int(2), rat_int(0)]]);
        assert_eq!(s.dim(), 1);
        let pt = poly(&[&[3, 4]]);
        assert_eq!(pt.vertices().len(), 1);
        assert_eq!(pt.dim(), 0);
    }

    #[test]
    fn hull_rejects_bad_input() {
        assert!(matches!(convex_hull(&[]), Err(Error::Empty(_))));
        let big = vec![vec![rat_int(0); 7]];
        assert!(matches!(convex_hull(&big), Err(Error::DimCapExceeded { dim: 7, .. })));
    }

    #[test]
    fn volumes() {
        assert_eq!(unit_square().integral_volume(), rat_int(1));
        assert_eq!(poly(&[&[0, 0], &[2, 2]]).integral_volume(), rat_int(2));
        assert_eq!(triangle().integral_volume(), rat(1, 2));
        assert_eq!(poly(&[&[0, 0], &[2, 2]]).volume(), rat_int(0));
        let cube = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(cube.volume(), rat_int(1));
        // A triangle in a tilted plane of R^3: primitive simplex has volume 1/2.
        let tilted = poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(tilted.integral_volume(), rat(1, 2));
    }

    #[test]
    fn minkowski_examples() {
        let sq = unit_square();
        let moved = minkowski_sum(&sq, &poly(&[&[3, 3]])).unwrap();
        assert_eq!(moved, poly(&[&[3, 3], &[4, 3], &[3, 4], &[4, 4]]));
        let pent = minkowski_sum(&sq, &triangle()).unwrap();
        assert_eq!(pent, poly(&[&[0, 0], &[2, 0], &[2, 1], &[1, 2], &[0, 2]]));
        // Oracle: hull of all 12 vertex sums, area by shoelace.
        assert_eq!(pent.volume(), shoelace(pent.vertices()));
        assert_eq!(pent.volume(), rat(7, 2));
        assert_eq!(minkowski_sum(&sq, &poly(&[&[0, 0]])).unwrap(), sq);
        assert!(matches!(minkowski_sum(&sq, &poly(&[&[0, 0, 0]])), Err(Error::DimMismatch { .. })));
    }

    #[test]
    fn hrep_and_membership() {
        let t = triangle();
        assert_eq!(t.hrep().facets.len(), 3);
        assert!(t.hrep().equations.is_empty());
        assert!(t.contains(&[rat(1, 3), rat(1, 3)]));
        assert!(!t.contains(&[rat(2, 3), rat(2, 3)]));
        let seg = poly(&[&[0, 0], &[2, 2]]);
        assert_eq!(seg.hrep().equations.len(), 1);
        assert!(seg.contains(&[rat(1, 2), rat(1, 2)]));
        assert!(!seg.contains(&[rat(1, 2), rat(1, 3)]));
        assert!(!seg.contains(&[rat_int(3), rat_int(3)]));
    }

    #[test]
    fn lattice_point_enumeration() {
        let t = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(t.lattice_points().len(), 6);
        let seg = poly(&[&[0, 0], &[2, 2]]);
        assert_eq!(seg.lattice_points(), vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
    }

    #[test]
    fn json_format() {
        let s = serde_json::to_string(&triangle()).unwrap();
        assert_eq!(s, r#"{"ambient_dim":2,"vertices":[["0","0"],["0","1"],["1","0"]]}"#);
        let p: RationalPolytope = serde_json::from_str(r#"{"ambient_dim":2,"vertices":[["0","0"],["1/2","1/4"],["1","0"],["0","1"]]}"#).unwrap();
        assert_eq!(p, triangle());
    }
}
