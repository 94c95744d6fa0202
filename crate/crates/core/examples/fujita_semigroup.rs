//! Subsemigroups generated by one level, and levelwise sums.

use okounkov::semigroup::{level_subsemigroup, levels, levelwise_sum, SemigroupSpec};

fn main() {
    let s = SemigroupSpec::nonneg(vec![vec![0, 1], vec![3, 2]]).unwrap();
    for p in 1..=6 {
        let (_, r) = level_subsemigroup(&s, p).unwrap();
        println!("p={p}: |S_p|={} phi={} phi/p^q={} target={}", r.level_size, r.phi, r.phi_over_p_q, r.target);
    }

    let a = SemigroupSpec::nonneg(vec![vec![0, 1], vec![1, 1]]).unwrap();
    let b = SemigroupSpec::nonneg(vec![vec![0, 1], vec![2, 1]]).unwrap();
    let sum = levelwise_sum(&a, &b, 3).unwrap();
    for (k, level) in levels(&sum, 3).unwrap().iter().enumerate() {
        println!("level {k} of the sum: {level:?}");
    }
}
