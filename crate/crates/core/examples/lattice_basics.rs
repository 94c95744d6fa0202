//! Hermite normal form, lattice membership and subgroup indices.

use okounkov::linalg::{hnf, subgroup_index, IntMatrix, Lattice};
use okounkov::num::int;

fn main() {
    let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let (h, u) = hnf(&m);
    println!("H = {:?}", h.to_rows());
    println!("det U = {}", u.determinant());

    let even = Lattice::from_i64(2, &[vec![2, 0], vec![1, 1]]);
    println!("rank {} basis {:?}", even.rank(), even.basis());
    println!("(3,1) in L: {}", even.contains(&[int(3), int(1)]));
    println!("(1,0) in L: {}", even.contains(&[int(1), int(0)]));

    let index = subgroup_index(&even, &Lattice::full(2)).unwrap();
    println!("[Z^2 : L] = {index:?}");
}
