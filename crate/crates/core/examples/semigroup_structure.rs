//! Cone, group, index and conductor of finitely generated semigroups.

use okounkov::semigroup::{analyze, conductor, conductor_violations, gaps, SemigroupSpec};

fn main() {
    for gens in [vec![vec![2], vec![3]], vec![vec![3], vec![5]]] {
        let s = SemigroupSpec::plain(gens.clone()).unwrap();
        let g: Vec<i64> = gaps(&s, 20).unwrap().into_iter().map(|p| p[0]).collect();
        let c = conductor(&s).unwrap();
        println!("<{:?}>: gaps {g:?}, conductor {:?}", gens.concat(), c.g0);
    }

    let s = SemigroupSpec::nonneg(vec![vec![0, 1], vec![2, 1]]).unwrap();
    let r = analyze(&s).unwrap();
    println!("gens (0,1),(2,1): m={:?} q={:?} ind={:?}", r.m, r.q, r.ind);
    println!("  strongly admissible: {:?}", r.strongly_admissible);
    println!("  facet normals: {:?}", r.facet_normals);

    let c = conductor(&s).unwrap();
    println!("  conductor {:?}, multipliers {:?}", c.g0, c.multipliers);
    let bad = conductor_violations(&s, &c.g0, 30).unwrap();
    println!("  Reg(S) + g0 outside S up to level 30: {}", bad.len());
}
