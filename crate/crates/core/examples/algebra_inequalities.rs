//! Superadditivity, Brunn-Minkowski and Fujita stabilization for A_L.

use okounkov::graded_algebras::{brunn_minkowski_report, componentwise_product, fujita_scan, AlgebraSpec};

fn main() {
    let square = AlgebraSpec::monomial(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], 3).unwrap();
    let triangle = AlgebraSpec::monomial(&[vec![0, 0], vec![1, 0], vec![0, 1]], 3).unwrap();

    let (_, sup) = componentwise_product(&square, &triangle).unwrap();
    for l in &sup.levels {
        println!("k={}: |D_a + D_b| = {}, |D_ab| = {}", l.k, l.sum_size, l.product_size);
    }

    let bm = brunn_minkowski_report(&square, &triangle, 8).unwrap();
    println!("rho: {} {} {} holds={} equality={}", bm.rho_a, bm.rho_b, bm.rho_ab, bm.holds, bm.equality);

    let scan = fujita_scan(&triangle.with_truncation(6).unwrap()).unwrap();
    let ratios: Vec<String> = scan.reports.iter().map(|r| r.phi_over_p_q.to_string()).collect();
    println!("phi(p)/p^2 = {ratios:?}, constant from p = {}", scan.stable_from);
}
