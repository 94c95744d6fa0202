//! Hilbert functions, Newton-Okounkov bodies and the weighted-sum limit.

use okounkov::polyhedra::Polynomial;
use okounkov::semigroup::{growth_report, hilbert, newton_okounkov_body, weighted_sum_report, SemigroupSpec};

fn main() {
    for gens in [vec![vec![1, 1], vec![2, 1]], vec![vec![0, 1], vec![2, 1]]] {
        let s = SemigroupSpec::nonneg(gens.clone()).unwrap();
        let body = newton_okounkov_body(&s).unwrap();
        println!("gens {gens:?}");
        println!("  body {}", body.body);
        println!("  Vol_q = {}, ind = {}, limit = {}", body.volume, body.ind, body.growth_limit);
        println!("  H(0..10) = {:?}", hilbert(&s, 10).unwrap().values);
        let g = growth_report(&s, 50).unwrap();
        println!("  H(50)/50 = {}, relative error {:?}", g.sequence.last().unwrap(), g.last_relative_error.map(|e| e.to_string()));
    }

    let s = SemigroupSpec::nonneg(vec![vec![1, 1], vec![2, 1]]).unwrap();
    let r = weighted_sum_report(&s, &Polynomial::variable(1, 0), 50).unwrap();
    println!("sum of x over S_k / k^2 at k=50: {} (limit {})", r.sequence.last().unwrap(), r.limit_prediction);
}
