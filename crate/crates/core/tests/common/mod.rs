//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use okounkov::num::{rat, rat_int, Rat};
use okounkov::valuations::LaurentPoly;

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Monotone-chain hull, counter-clockwise, without collinear points.
pub fn hull_points(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = points.to_vec();
    p.sort();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut lower: Vec<Vec<i64>> = Vec::new();
    for x in &p {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], x) <= 0 {
            lower.pop();
        }
        lower.push(x.clone());
    }
    let mut upper: Vec<Vec<i64>> = Vec::new();
    for x in p.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], x) <= 0 {
            upper.pop();
        }
        upper.push(x.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

pub fn hull_2d(points: &[Vec<i64>]) -> BTreeSet<Vec<Rat>> {
    hull_points(points).into_iter().map(|v| v.into_iter().map(rat_int).collect()).collect()
}

/// Shoelace area of the convex hull.
pub fn polygon_area(points: &[Vec<i64>]) -> Rat {
    let h = hull_points(points);
    if h.len() < 3 {
        return Rat::zero();
    }
    let twice: i64 = (0..h.len()).map(|i| {
        let (a, b) = (&h[i], &h[(i + 1) % h.len()]);
        a[0] * b[1] - a[1] * b[0]
    }).sum();
    rat(twice.abs(), 2)
}

/// `V(P, Q) = (Area(P + Q) - Area(P) - Area(Q)) / 2`.
pub fn polygon_mixed_area(p: &[Vec<i64>], q: &[Vec<i64>]) -> Rat {
    let sum: Vec<Vec<i64>> = p.iter().flat_map(|a| q.iter().map(move |b| vec![a[0] + b[0], a[1] + b[1]])).collect();
    (polygon_area(&sum) - polygon_area(p) - polygon_area(q)) / rat_int(2)
}

/// Index in `Z^2` of the group generated by differences of `points` (0 if rank < 2).
pub fn difference_index(points: &[Vec<i64>]) -> i64 {
    let d: Vec<(i64, i64)> = points.iter().map(|p| (p[0] - points[0][0], p[1] - points[0][1])).collect();
    let mut g = 0i64;
    for a in &d {
        for b in &d {
            let det = (a.0 * b.1 - a.1 * b.0).abs();
            g = gcd(g, det);
        }
    }
    g
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Rank of the coefficient matrix of `polys` over the monomial basis.
pub fn rational_rank(polys: &[LaurentPoly]) -> usize {
    let monomials: BTreeSet<Vec<i64>> = polys.iter().flat_map(|p| p.terms().keys().cloned()).collect();
    let mut rows: Vec<Vec<Rat>> = polys
        .iter()
        .map(|p| monomials.iter().map(|m| p.terms().get(m).cloned().unwrap_or_else(Rat::zero)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..monomials.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &rows[rank][col];
                let pr = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `sqrt(a) + sqrt(b) <= sqrt(c)` by squaring twice.
pub fn rho_sum_le(a: &Rat, b: &Rat, c: &Rat) -> bool {
    let d = c - a - b;
    !d.is_negative() && rat_int(4) * a * b <= &d * &d
}

/// One invocation per CLI subcommand; `p` resolves fixture names.
pub fn cli_commands(p: &dyn Fn(&str) -> String) -> Vec<Vec<String>> {
    let cmds: Vec<Vec<String>> = vec![
        vec!["semigroup", "analyze", "--in", &p("s_11_21.json")],
        vec!["semigroup", "levels", "--in", &p("s_11_21.json"), "--k", "4"],
        vec!["semigroup", "regularize", "--in", &p("s_01_21.json"), "--k", "4"],
        vec!["semigroup", "conductor", "--in", &p("s_2_3.json"), "--verify-k", "20"],
        vec!["semigroup", "approx-check", "--in", &p("s_01_21.json")],
        vec!["semigroup", "body", "--in", &p("s_01_21.json"), "--float"],
        vec!["semigroup", "hilbert", "--in", &p("s_11_21.json"), "--k", "10", "--format", "csv"],
        vec!["semigroup", "weighted-sum", "--in", &p("s_11_21.json"), "--poly", &p("x.json"), "--k", "20"],
        vec!["semigroup", "fujita", "--in", &p("s_01_21.json"), "--p", "3"],
        vec!["semigroup", "levelwise-sum", &p("s_11_21.json"), &p("s_01_21.json"), "--k", "3"],
        vec!["polytope", "hull", "--in", &p("square.json")],
        vec!["polytope", "volume", "--in", &p("triangle.json")],
        vec!["polytope", "minkowski", &p("square.json"), &p("triangle.json")],
        vec!["polytope", "mixed-volume", &p("square.json"), &p("triangle.json")],
        vec!["polytope", "integrate", "--in", &p("square.json"), "--poly", &p("xy.json")],
        vec!["valuation", "value", "--poly", &p("x.json"), "--order", &p("lex1.json"), "--degree", "2"],
        vec!["valuation", "subspace-values", "--in", &p("l2.json"), "--order", &p("lex1.json")],
        vec!["valuation", "product", &p("l1.json"), &p("l2.json"), "--order", &p("lex1.json")],
        vec!["algebra", "hilbert", "--in", &p("a_square.json")],
        vec!["algebra", "semigroup", "--in", &p("a_triangle.json")],
        vec!["algebra", "body", "--in", &p("a_nonmonomial.json"), "--format", "csv"],
        vec!["algebra", "kushnirenko", "--exponents", &p("i_triangle.json"), "--bernstein", &p("bernstein.json")],
        vec!["algebra", "product", &p("a_square.json"), &p("a_triangle.json")],
        vec!["algebra", "brunn-minkowski", &p("a_square.json"), &p("a_triangle.json")],
        vec!["algebra", "fujita", "--in", &p("a_nonmonomial.json")],
        vec!["verify", "af", "--dim", "2", "--trials", "200", "--seed", "7"],
        vec!["verify", "bm", "--dim", "2", "--trials", "50", "--seed", "3"],
        vec!["verify", "hodge2d", "--dim", "2", "--trials", "50", "--seed", "3"],
        vec!["verify", "isoperimetric", "--dim", "3", "--trials", "5", "--seed", "3"],
        vec!["verify", "superadditivity", "--dim", "2", "--trials", "5", "--seed", "3"],
    ]
    .into_iter()
    .map(|c| c.into_iter().map(String::from).collect())
    .collect();
    cmds
}
