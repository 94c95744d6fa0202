//! Hulls, volumes, Minkowski sums, mixed volumes and exact integration.

use okounkov::num::rat;
use okounkov::polyhedra::{convex_hull_i64, integrate_homogeneous, minkowski_sum, mixed_volume, Polynomial};

fn main() {
    let square = convex_hull_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 0]]).unwrap();
    let triangle = convex_hull_i64(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
    println!("square vertices: {}", square.vertices().len());
    println!("Vol(square) = {}, Vol(triangle) = {}", square.volume(), triangle.volume());

    let sum = minkowski_sum(&square, &triangle).unwrap();
    println!("square + triangle has {} vertices, area {}", sum.vertices().len(), sum.volume());

    let mv = mixed_volume(&[square.clone(), triangle.clone()]).unwrap();
    println!("V(square, triangle) = {}", mv.value);
    for s in &mv.subset_volumes {
        println!("  Vol(sum of {:?}) = {}", s.subset, s.volume);
    }

    // x over the unit square is 1/2; x*y over the triangle is 1/24.
    let x = Polynomial::variable(2, 0);
    let xy = Polynomial::new(2, [(vec![1, 1], rat(1, 1))]).unwrap();
    println!("int x = {}", integrate_homogeneous(&square, &x).unwrap());
    println!("int xy = {}", integrate_homogeneous(&triangle, &xy).unwrap());

    let segment = convex_hull_i64(&[vec![0, 0], vec![3, 3]]).unwrap();
    println!("segment: dim {}, integral length {}", segment.dim(), segment.integral_volume());
}
