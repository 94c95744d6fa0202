//! Graded algebras A_L: Hilbert functions and truncated bodies.

use okounkov::graded_algebras::{body_approximation, hilbert_function, kushnirenko_report, AlgebraSpec};
use okounkov::valuations::{LaurentPoly, LaurentSubspace, TermOrder};

fn main() {
    let i = vec![vec![0, 0], vec![2, 0], vec![0, 1], vec![1, 1]];
    let k = kushnirenko_report(&i, 4).unwrap();
    println!("L(I): body at K=4 equals Delta_I: {}, n! Vol = {}", k.exact, k.kushnirenko_number);

    // span{1, x, x^2 + y}: not monomial, and y dominates x^2 in the order below.
    let l = LaurentSubspace::new(
        2,
        vec![
            LaurentPoly::from_i64(2, &[(&[0, 0], 1)]),
            LaurentPoly::from_i64(2, &[(&[1, 0], 1)]),
            LaurentPoly::from_i64(2, &[(&[2, 0], 1), (&[0, 1], 1)]),
        ],
    )
    .unwrap();
    let a = AlgebraSpec::new(l, TermOrder::lex_perm(vec![1, 0]).unwrap(), 6).unwrap();
    println!("H(k) = {:?}", hilbert_function(&a).unwrap().values);
    let b = body_approximation(&a).unwrap();
    println!("cumulative body at K={}: {}", b.truncation, b.cumulative);
    println!("volume lower bound {}, ind upper bound {}", b.volume_lower_bound, b.ind_upper_bound);
}
