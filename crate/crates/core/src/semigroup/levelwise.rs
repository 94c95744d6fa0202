use std::collections::BTreeSet;

use super::enumerate::levels;
use super::spec::SemigroupSpec;
use crate::error::{Error, Result};

/// Level table of `a ⊕_t b` up to level `K`: level `k` is the Minkowski sum of the
/// level-`k` pieces, empty when either piece is.
pub fn levelwise_sum(a: &SemigroupSpec, b: &SemigroupSpec, k_max: usize) -> Result<SemigroupSpec> {
    let n = a.ambient_dim();
    if b.ambient_dim() != n {
        return Err(Error::DimMismatch { expected: n, got: b.ambient_dim() });
    }
    let (la, lb) = (levels(a, k_max)?, levels(b, k_max)?);
    let sums = la
        .iter()
        .zip(&lb)
        .enumerate()
        .map(|(k, (xa, xb))| {
            let mut out = BTreeSet::new();
            for x in xa {
                for y in xb {
                    let mut z: Vec<i64> = x.iter().zip(y).map(|(u, v)| u + v).collect();
                    z[n - 1] = k as i64;
                    out.insert(z);
                }
            }
            out.into_iter().collect()
        })
        .collect();
    SemigroupSpec::table_from_full(n, sums)
}
