//! Seeded generators for the randomized harnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::num::rat_int;
use crate::polyhedra::{convex_hull_i64, RationalPolytope};
use crate::semigroup::SemigroupSpec;
use crate::valuations::{LaurentPoly, LaurentSubspace};

pub const DEFAULT_VERTICES: usize = 6;
pub const DEFAULT_BOX: i64 = 5;

/// Generator for trial `i` of a run seeded with `seed`; trials are independent.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Hull of `vertices` points drawn uniformly from `[-bound, bound]^n`; may be degenerate.
pub fn lattice_polytope(rng: &mut impl Rng, n: usize, vertices: usize, bound: i64) -> RationalPolytope {
    let pts: Vec<Vec<i64>> = (0..vertices.max(1)).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    convex_hull_i64(&pts).expect("nonempty point set")
}

/// As [`lattice_polytope`], resampling until the hull is full-dimensional.
pub fn full_dimensional_polytope(rng: &mut impl Rng, n: usize, vertices: usize, bound: i64) -> RationalPolytope {
    loop {
        let p = lattice_polytope(rng, n, vertices.max(n + 1), bound);
        if p.is_full_dimensional() {
            return p;
        }
    }
}

/// Random generators for a semigroup in `Z^1` (positive entries) or a non-negative
/// semigroup in `Z x Z` (positive levels), with entries at most `max_entry`.
pub fn semigroup(rng: &mut impl Rng, two_dim: bool, max_gens: usize, max_entry: i64) -> SemigroupSpec {
    let count = rng.gen_range(1..=max_gens);
    if two_dim {
        let gens = (0..count).map(|_| vec![rng.gen_range(0..=max_entry), rng.gen_range(1..=max_entry)]).collect();
        SemigroupSpec::nonneg(gens).expect("levels are positive")
    } else {
        let gens = (0..count).map(|_| vec![rng.gen_range(1..=max_entry)]).collect();
        SemigroupSpec::plain(gens).expect("nonempty generators")
    }
}

/// `count` polynomials with up to `max_terms` terms, exponents in `[-e, e]^n`, small integer coefficients.
pub fn laurent_polys(rng: &mut impl Rng, n: usize, count: usize, max_terms: usize, e: i64) -> Vec<LaurentPoly> {
    (0..count)
        .map(|_| loop {
            let terms = (0..rng.gen_range(1..=max_terms))
                .map(|_| ((0..n).map(|_| rng.gen_range(-e..=e)).collect(), rat_int(rng.gen_range(-5..=5))));
            let p = LaurentPoly::new(n, terms).expect("exponent lengths match");
            if !p.is_zero() {
                break p;
            }
        })
        .collect()
}

/// A subspace spanned by random polynomials; the basis may be dependent.
pub fn laurent_subspace(rng: &mut impl Rng, n: usize, dim: usize, max_terms: usize, e: i64) -> LaurentSubspace {
    LaurentSubspace::new(n, laurent_polys(rng, n, dim, max_terms, e)).expect("nonempty basis")
}

/// Exponent set of size `1..=max_size` in `[0, bound]^n`.
pub fn exponent_set(rng: &mut impl Rng, n: usize, max_size: usize, bound: i64) -> Vec<Vec<i64>> {
    let size = rng.gen_range(1..=max_size);
    let mut set: Vec<Vec<i64>> = (0..size).map(|_| (0..n).map(|_| rng.gen_range(0..=bound)).collect()).collect();
    set.sort();
    set.dedup();
    set
}
