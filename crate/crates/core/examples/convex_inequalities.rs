//! Brunn-Minkowski, Hodge and Alexandrov-Fenchel on fixed and seeded bodies.

use okounkov::harness::{run_harness, Harness, HarnessConfig};
use okounkov::polyhedra::{check_inequalities, convex_hull_i64, InequalityMode};

fn main() {
    let square = convex_hull_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
    let triangle = convex_hull_i64(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
    for mode in [InequalityMode::Bm, InequalityMode::Hodge2d] {
        let r = check_inequalities(&[square.clone(), triangle.clone()], &mode).unwrap();
        let show = |v: &[okounkov::num::Rat]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        println!("{}: lhs [{}] rhs [{}] holds={} equality={}", r.mode, show(&r.lhs.terms), show(&r.rhs.terms), r.holds, r.equality);
    }
    let r = check_inequalities(&[square.clone(), square.scale(&okounkov::num::rat(3, 1))], &InequalityMode::Bm).unwrap();
    println!("homothetic squares: equality={}", r.equality);

    for (h, dim) in [(Harness::Af, 3), (Harness::Isoperimetric, 3), (Harness::Hodge2d, 2)] {
        let report = run_harness(&HarnessConfig::new(h, dim, 20, 7)).unwrap();
        println!("{h} in dim {dim}: {} trials, {} violations", report.checked, report.violations.len());
    }
}
