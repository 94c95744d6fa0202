//! Values of Laurent polynomials and subspaces under term orders.

use okounkov::valuations::{product_subspace, LaurentPoly, LaurentSubspace, TermOrder};

fn main() {
    let f = LaurentPoly::from_i64(2, &[(&[2, 0], 1), (&[0, 1], 1), (&[-1, 3], -2)]);
    for order in [TermOrder::lex(2), TermOrder::lex_perm(vec![1, 0]).unwrap(), TermOrder::grlex(vec![1, 1]).unwrap()] {
        println!("{:?}: v(f) = {:?}", order.kind(), f.val(&order).unwrap());
    }

    let t = TermOrder::lex(1);
    let one = LaurentPoly::from_i64(1, &[(&[0], 1)]);
    let x = LaurentPoly::from_i64(1, &[(&[1], 1)]);
    let l1 = LaurentSubspace::new(1, vec![one.clone(), x.clone()]).unwrap();
    let l2 = LaurentSubspace::new(1, vec![x, LaurentPoly::from_i64(1, &[(&[0], 1), (&[2], 1)])]).unwrap();
    let d1 = &l1.reduce(&t).unwrap().values;
    let d2 = &l2.reduce(&t).unwrap().values;
    let p = product_subspace(&l1, &l2, &t).unwrap();
    println!("D1 = {d1:?}, D2 = {d2:?}");
    println!("dim L1 L2 = {}, values {:?}", p.dim(), p.reduce(&t).unwrap().values);
}
