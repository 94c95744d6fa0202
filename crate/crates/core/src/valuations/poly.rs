use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::order::{GradedValue, TermOrder};
use crate::error::{Error, Result};
use crate::num::{serde_str, Rat};

/// A Laurent polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exp: Vec<i64>,
    #[serde(with = "serde_str::rational")]
    coef: Rat,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nvars: Option<usize>,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.terms.is_empty().then_some(self.nvars),
            terms: self.terms.iter().map(|(e, c)| TermJson { exp: e.clone(), coef: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        let n = match (j.nvars, j.terms.first()) {
            (Some(n), _) => n,
            (None, Some(t)) => t.exp.len(),
            (None, None) => return Err(serde::de::Error::custom("the zero polynomial needs \"nvars\"")),
        };
        LaurentPoly::new(n, j.terms.into_iter().map(|t| (t.exp, t.coef))).map_err(serde::de::Error::custom)
    }
}

impl LaurentPoly {
    /// Sums repeated exponents and drops zero coefficients.
    pub fn new(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rat)>) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn zero(nvars: usize) -> LaurentPoly {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(exp: Vec<i64>, coef: Rat) -> LaurentPoly {
        let mut p = LaurentPoly::zero(exp.len());
        p.add_term(exp, coef);
        p
    }

    pub fn one(nvars: usize) -> LaurentPoly {
        LaurentPoly::monomial(vec![0; nvars], Rat::one())
    }

    /// Integer-coefficient shorthand: `[(exponent, coefficient)]`.
    pub fn from_i64(nvars: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::new(nvars, terms.iter().map(|(e, c)| (e.to_vec(), Rat::from_integer((*c).into()))))
            .expect("exponent lengths match")
    }

    fn add_term(&mut self, e: Vec<i64>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &[i64]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// `self - c * other`, in place.
    pub(crate) fn sub_scaled(&mut self, other: &LaurentPoly, c: &Rat) {
        for (e, v) in &other.terms {
            let slot = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
            *slot -= v * c;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    /// Exponent of the smallest term under `order`.
    pub fn val(&self, order: &TermOrder) -> Result<Vec<i64>> {
        self.check_order(order)?;
        order.min(self.terms.keys()).cloned().ok_or(Error::ZeroPoly)
    }

    /// Smallest exponent together with its coefficient.
    pub fn leading(&self, order: &TermOrder) -> Result<(Vec<i64>, Rat)> {
        let e = self.val(order)?;
        let c = self.terms[&e].clone();
        Ok((e, c))
    }

    /// `v_t(f t^k) = (v(f), k)`.
    pub fn vt_value(&self, degree: u64, order: &TermOrder) -> Result<GradedValue> {
        Ok(GradedValue { exponent: self.val(order)?, degree })
    }

    fn check_order(&self, order: &TermOrder) -> Result<()> {
        if order.nvars() != self.nvars {
            return Err(Error::DimMismatch { expected: self.nvars, got: order.nvars() });
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.sub_scaled(rhs, &-Rat::one());
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.sub_scaled(rhs, &Rat::one());
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                *terms.entry(e).or_insert_with(Rat::zero) += x * y;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        LaurentPoly { nvars: self.nvars, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        let lex = TermOrder::lex(2);
        let f = LaurentPoly::from_i64(2, &[(&[2, 0], 1), (&[1, 1], 1)]);
        assert_eq!(f.val(&lex).unwrap(), vec![1, 1]);
        let m = LaurentPoly::from_i64(2, &[(&[-3, 4], 7)]);
        assert_eq!(m.val(&lex).unwrap(), vec![-3, 4]);
        let t = LaurentPoly::from_i64(1, &[(&[0], 1), (&[1], 1)]);
        assert_eq!(t.val(&TermOrder::lex(1)).unwrap(), vec![0]);
        assert_eq!(LaurentPoly::zero(2).val(&lex), Err(Error::ZeroPoly));
        assert_eq!(LaurentPoly::one(3).vt_value(5, &TermOrder::lex(3)).unwrap().exponent, vec![0, 0, 0]);
        assert_eq!(f.vt_value(1, &lex).unwrap(), GradedValue { exponent: vec![1, 1], degree: 1 });
    }

    #[test]
    fn arithmetic() {
        let x = LaurentPoly::from_i64(1, &[(&[1], 1)]);
        let one = LaurentPoly::one(1);
        let p = &(&one + &x) * &(&one - &x);
        assert_eq!(p, LaurentPoly::from_i64(1, &[(&[0], 1), (&[2], -1)]));
        assert!((&p - &p).is_zero());
        assert_eq!(&p + &(-&p), LaurentPoly::zero(1));
    }

    #[test]
    fn json() {
        let p: LaurentPoly = serde_json::from_str(r#"{"terms":[{"exp":[1,-1],"coef":"1/2"},{"exp":[1,-1],"coef":"1/2"}]}"#).unwrap();
        assert_eq!(p, LaurentPoly::from_i64(2, &[(&[1, -1], 1)]));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"terms":[{"exp":[1,-1],"coef":"1"}]}"#);
        let z: LaurentPoly = serde_json::from_str(r#"{"nvars":2,"terms":[]}"#).unwrap();
        assert!(z.is_zero());
    }
}
