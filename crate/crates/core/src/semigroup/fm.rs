//! Fourier–Motzkin feasibility for mixed strict and non-strict linear inequalities.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::num::Rat;

/// `coeffs . x <= bound`, or `< bound` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub bound: Rat,
    pub strict: bool,
}

impl Constraint {
    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Constraint {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            self.coeffs.iter_mut().for_each(|c| *c = &*c / &lead);
            self.bound = &self.bound / &lead;
        }
        self
    }
}

/// Whether some real `x` satisfies every constraint.
pub fn feasible(constraints: Vec<Constraint>, nvars: usize) -> bool {
    let mut current: BTreeSet<Constraint> = constraints.into_iter().map(Constraint::normalized).collect();
    for j in 0..nvars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for c in current {
            if c.coeffs[j].is_positive() {
                pos.push(c);
            } else if c.coeffs[j].is_negative() {
                neg.push(c);
            } else {
                rest.insert(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let a = p.coeffs[j].clone();
                let b = -q.coeffs[j].clone();
                let coeffs: Vec<Rat> = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &b + y * &a).collect();
                let combined = Constraint {
                    coeffs,
                    bound: &p.bound * &b + &q.bound * &a,
                    strict: p.strict || q.strict,
                };
                rest.insert(combined.normalized());
            }
        }
        current = rest;
    }
    current.iter().all(|c| if c.strict { c.bound.is_positive() } else { !c.bound.is_negative() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;

    fn c(coeffs: &[i64], bound: i64, strict: bool) -> Constraint {
        Constraint { coeffs: coeffs.iter().map(|&x| rat_int(x)).collect(), bound: rat_int(bound), strict }
    }

    #[test]
    fn strictness_matters() {
        // x <= 0 and -x <= 0 is feasible; x < 0 and -x <= 0 is not.
        assert!(feasible(vec![c(&[1], 0, false), c(&[-1], 0, false)], 1));
        assert!(!feasible(vec![c(&[1], 0, true), c(&[-1], 0, false)], 1));
    }

    #[test]
    fn two_variables() {
        // x + y < 1 with x >= 1, y >= 0 is infeasible.
        let cons = vec![c(&[1, 1], 1, true), c(&[-1, 0], -1, false), c(&[0, -1], 0, false)];
        assert!(!feasible(cons, 2));
        let ok = vec![c(&[1, 1], 1, true), c(&[-1, 0], 0, false), c(&[0, -1], 0, false)];
        assert!(feasible(ok, 2));
    }
}
