use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::order::TermOrder;
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Value set of a subspace with a basis realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    /// Distinct values in increasing order.
    pub values: Vec<Vec<i64>>,
    /// `leaf_basis[i]` has value `values[i]` and leading coefficient 1.
    pub leaf_basis: Vec<LaurentPoly>,
}

/// A finite-dimensional subspace of Laurent polynomials given by a basis.
#[derive(Debug)]
pub struct LaurentSubspace {
    nvars: usize,
    basis: Vec<LaurentPoly>,
    reduced: OnceLock<(TermOrder, Reduction)>,
}

impl Clone for LaurentSubspace {
    fn clone(&self) -> Self {
        let reduced = OnceLock::new();
        if let Some(r) = self.reduced.get() {
            let _ = reduced.set(r.clone());
        }
        LaurentSubspace { nvars: self.nvars, basis: self.basis.clone(), reduced }
    }
}

impl PartialEq for LaurentSubspace {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.basis == other.basis
    }
}

impl Eq for LaurentSubspace {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubspaceJson {
    basis: Vec<LaurentPoly>,
}

impl Serialize for LaurentSubspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceJson { basis: self.basis.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentSubspace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SubspaceJson::deserialize(d)?;
        let n = j.basis.first().map(|p| p.nvars()).ok_or_else(|| serde::de::Error::custom("empty basis"))?;
        LaurentSubspace::new(n, j.basis).map_err(serde::de::Error::custom)
    }
}

/// Echelon reduction by valuation. Dependent inputs are an error unless `skip_dependent`.
fn reduce(polys: &[LaurentPoly], order: &TermOrder, skip_dependent: bool) -> Result<Reduction> {
    let mut basis: Vec<LaurentPoly> = Vec::new();
    let mut values: Vec<Vec<i64>> = Vec::new();
    let mut by_value: HashMap<Vec<i64>, usize> = HashMap::new();
    for p in polys {
        let mut f = p.clone();
        loop {
            if f.is_zero() {
                if skip_dependent {
                    break;
                }
                return Err(Error::DependentBasis);
            }
            let (v, c) = f.leading(order)?;
            match by_value.get(&v) {
                Some(&i) => f.sub_scaled(&basis[i], &c),
                None => {
                    by_value.insert(v.clone(), basis.len());
                    basis.push(f.scale(&c.recip()));
                    values.push(v);
                    break;
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| order.compare(&values[a], &values[b]));
    Ok(Reduction {
        values: idx.iter().map(|&i| values[i].clone()).collect(),
        leaf_basis: idx.iter().map(|&i| basis[i].clone()).collect(),
    })
}

impl LaurentSubspace {
    /// Subspace with the given basis. Independence is checked on reduction.
    pub fn new(nvars: usize, basis: Vec<LaurentPoly>) -> Result<LaurentSubspace> {
        if basis.is_empty() {
            return Err(Error::Empty("subspace basis".into()));
        }
        if let Some(p) = basis.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::DimMismatch { expected: nvars, got: p.nvars() });
        }
        Ok(LaurentSubspace { nvars, basis, reduced: OnceLock::new() })
    }

    /// Span of arbitrary polynomials, with a basis extracted by reduction under `order`.
    pub fn spanned_by(nvars: usize, polys: &[LaurentPoly], order: &TermOrder) -> Result<LaurentSubspace> {
        let r = reduce(polys, order, true)?;
        if r.leaf_basis.is_empty() {
            return Err(Error::Empty("all spanning polynomials are zero".into()));
        }
        let s = LaurentSubspace::new(nvars, r.leaf_basis.clone())?;
        let _ = s.reduced.set((order.clone(), r));
        Ok(s)
    }

    /// `L(I)`: the span of the monomials with exponents in `I`.
    pub fn monomial(nvars: usize, exponents: &[Vec<i64>]) -> Result<LaurentSubspace> {
        let mut set: Vec<Vec<i64>> = exponents.to_vec();
        set.sort();
        set.dedup();
        let basis = set.into_iter().map(|e| LaurentPoly::monomial(e, crate::num::rat_int(1))).collect();
        LaurentSubspace::new(nvars, basis)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[LaurentPoly] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Value set `v(L \ {0})` and a leaf basis; cached for the first order used.
    pub fn reduce(&self, order: &TermOrder) -> Result<Reduction> {
        if order.nvars() != self.nvars {
            return Err(Error::DimMismatch { expected: self.nvars, got: order.nvars() });
        }
        if let Some((o, r)) = self.reduced.get() {
            if o == order {
                return Ok(r.clone());
            }
            return reduce(&self.basis, order, false);
        }
        let r = reduce(&self.basis, order, false)?;
        let _ = self.reduced.set((order.clone(), r.clone()));
        Ok(r)
    }
}

/// Value set and leaf basis of a subspace.
pub fn reduce_subspace(ls: &LaurentSubspace, order: &TermOrder) -> Result<Reduction> {
    ls.reduce(order)
}

/// Span of all products `fg`.
pub fn product_subspace(a: &LaurentSubspace, b: &LaurentSubspace, order: &TermOrder) -> Result<LaurentSubspace> {
    if a.nvars != b.nvars {
        return Err(Error::DimMismatch { expected: a.nvars, got: b.nvars });
    }
    let left = a.reduce(order)?.leaf_basis;
    let right = b.reduce(order)?.leaf_basis;
    let products: Vec<LaurentPoly> = left.iter().flat_map(|f| right.iter().map(move |g| f * g)).collect();
    LaurentSubspace::spanned_by(a.nvars, &products, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_adic() -> TermOrder {
        TermOrder::lex(1)
    }

    fn span(polys: &[&[(&[i64], i64)]]) -> LaurentSubspace {
        let n = polys[0][0].0.len();
        LaurentSubspace::new(n, polys.iter().map(|p| LaurentPoly::from_i64(n, p)).collect()).unwrap()
    }

    #[test]
    fn one_variable_product() {
        let l1 = span(&[&[(&[0], 1)], &[(&[1], 1)]]);
        let l2 = span(&[&[(&[1], 1)], &[(&[0], 1), (&[2], 1)]]);
        let o = t_adic();
        assert_eq!(reduce_subspace(&l1, &o).unwrap().values, vec![vec![0], vec![1]]);
        assert_eq!(reduce_subspace(&l2, &o).unwrap().values, vec![vec![0], vec![1]]);
        let p = product_subspace(&l1, &l2, &o).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(reduce_subspace(&p, &o).unwrap().values, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn dependent_basis() {
        let l = span(&[&[(&[1, 0], 1)], &[(&[1, 0], 2)]]);
        assert_eq!(reduce_subspace(&l, &TermOrder::lex(2)), Err(Error::DependentBasis));
    }

    #[test]
    fn shared_leading_terms_are_split() {
        let l = span(&[&[(&[0, 0], 1), (&[1, 0], 1)], &[(&[0, 0], 1), (&[0, 1], 1)], &[(&[0, 0], 2)]]);
        let r = reduce_subspace(&l, &TermOrder::lex(2)).unwrap();
        assert_eq!(r.values, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        for (f, v) in r.leaf_basis.iter().zip(&r.values) {
            assert_eq!(&f.val(&TermOrder::lex(2)).unwrap(), v);
            assert_eq!(f.coefficient(v), crate::num::rat_int(1));
        }
    }

    #[test]
    fn monomial_products_are_sumsets() {
        let o = TermOrder::lex(2);
        let a = LaurentSubspace::monomial(2, &[vec![0, 0], vec![1, 0]]).unwrap();
        let b = LaurentSubspace::monomial(2, &[vec![0, 0], vec![0, 1]]).unwrap();
        let p = product_subspace(&a, &b, &o).unwrap();
        let mut v = reduce_subspace(&p, &o).unwrap().values;
        v.sort();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let one = LaurentSubspace::monomial(2, &[vec![0, 0]]).unwrap();
        assert_eq!(reduce_subspace(&product_subspace(&a, &one, &o).unwrap(), &o).unwrap().values, reduce_subspace(&a, &o).unwrap().values);
    }
}
