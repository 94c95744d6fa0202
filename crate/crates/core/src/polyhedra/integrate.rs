use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::frame::Frame;
use super::polytope::{triangulate, RationalPolytope};
use crate::error::{Error, Result};
use crate::linalg::rational;
use crate::num::{factorial, rat_from_int, rat_int, Rat};

/// Polynomial with rational coefficients and nonnegative exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    #[serde(with = "crate::num::serde_str::rational")]
    coef: Rat,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(e, c)| TermJson { exp: e.clone(), coef: c.clone() }).collect();
        PolynomialJson { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolynomialJson::deserialize(d)?;
        let nvars = j.terms.first().map_or(0, |t| t.exp.len());
        Polynomial::new(nvars, j.terms.into_iter().map(|t| (t.exp, t.coef))).map_err(serde::de::Error::custom)
    }
}

impl Polynomial {
    pub fn new(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Result<Polynomial> {
        let mut map: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimMismatch { expected: nvars, got: e.len() });
            }
            *map.entry(e).or_insert_with(Rat::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial { nvars, terms: map })
    }

    pub fn constant(nvars: usize, c: Rat) -> Polynomial {
        Polynomial::new(nvars, [(vec![0; nvars], c)]).expect("arity matches")
    }

    /// The coordinate function `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Polynomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Polynomial::new(nvars, [(e, Rat::one())]).expect("arity matches")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone()));
        Polynomial { nvars: self.nvars, terms: terms.collect() }
    }

    /// Highest-degree homogeneous component (zero for the zero polynomial).
    pub fn top_component(&self) -> Polynomial {
        match self.degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, (e, c)| {
            let m = e.iter().zip(x).fold(Rat::one(), |p, (&k, xi)| p * num_traits::pow(xi.clone(), k as usize));
            acc + c * m
        })
    }

    /// Drops variables with index `>= keep`, requiring their exponents to be zero.
    pub fn truncate_vars(&self, keep: usize) -> Option<Polynomial> {
        if self.terms.keys().any(|e| e[keep.min(e.len())..].iter().any(|&k| k != 0)) {
            return None;
        }
        let terms = self.terms.iter().map(|(e, c)| (e[..keep.min(e.len())].to_vec(), c.clone()));
        Some(Polynomial { nvars: keep, terms: terms.collect() })
    }

    /// Pads with extra variables of exponent zero.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            e.resize(nvars, 0);
            (e, c.clone())
        });
        Polynomial { nvars, terms: terms.collect() }
    }
}

type LambdaPoly = BTreeMap<Vec<u32>, Rat>;

fn mul_linear(p: &LambdaPoly, coeffs: &[Rat]) -> LambdaPoly {
    let mut out = LambdaPoly::new();
    for (e, c) in p {
        for (i, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] += 1;
            *out.entry(e2).or_insert_with(Rat::zero) += c * a;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Integral of a monomial over a simplex of dimension `q` and integral volume `vol`.
fn monomial_over_simplex(exp: &[u32], vertices: &[Vec<Rat>], vol: &Rat) -> Rat {
    let q = vertices.len() - 1;
    let mut p = LambdaPoly::new();
    p.insert(vec![0; q + 1], Rat::one());
    for (j, &k) in exp.iter().enumerate() {
        let coeffs: Vec<Rat> = vertices.iter().map(|v| v[j].clone()).collect();
        for _ in 0..k {
            p = mul_linear(&p, &coeffs);
        }
    }
    let qf = rat_from_int(&factorial(q));
    p.iter().fold(Rat::zero(), |acc, (beta, c)| {
        let total: usize = beta.iter().map(|&b| b as usize).sum();
        let num = beta.iter().fold(crate::num::Int::one(), |acc, &b| acc * factorial(b as usize));
        acc + c * &qf * rat_from_int(&num) / rat_from_int(&factorial(q + total))
    }) * vol
}


/// Exact integral of `f` over `p` against the integral measure on the affine hull of `p`.
pub fn integrate_homogeneous(p: &RationalPolytope, f: &Polynomial) -> Result<Rat> {
    if f.nvars() != p.ambient_dim() && !f.is_zero() {
        return Err(Error::DimMismatch { expected: p.ambient_dim(), got: f.nvars() });
    }
    let verts = p.vertices();
    if p.dim() == 0 {
        return Ok(f.eval(&verts[0]));
    }
    let frame = Frame::affine(verts);
    let coords: Vec<Vec<Rat>> = verts.iter().map(|v| frame.coords(v)).collect();
    let idx: Vec<usize> = (0..verts.len()).collect();
    let qf = rat_from_int(&factorial(p.dim()));
    let mut total = Rat::zero();
    for s in triangulate(verts, &idx) {
        let base = &coords[s[0]];
        let m: Vec<Vec<Rat>> = s[1..].iter().map(|&i| rational::sub(&coords[i], base)).collect();
        let vol = rational::determinant(&m).abs() / &qf;
        let simplex: Vec<Vec<Rat>> = s.iter().map(|&i| verts[i].clone()).collect();
        for (e, c) in f.terms() {
            total += c * monomial_over_simplex(e, &simplex, &vol);
        }
    }
    Ok(total)
}

/// Integral of `f` over the simplex spanned by `vertices`, used as an oracle in tests.
pub fn integrate_over_simplex(vertices: &[Vec<Rat>], f: &Polynomial, vol: &Rat) -> Rat {
    f.terms().iter().fold(Rat::zero(), |acc, (e, c)| acc + c * monomial_over_simplex(e, vertices, vol))
}

impl Polynomial {
    /// `sum c * x^e` read from `(exponent, numerator, denominator)` triples.
    pub fn from_i64(nvars: usize, terms: &[(&[u32], i64, i64)]) -> Polynomial {
        Polynomial::new(nvars, terms.iter().map(|(e, n, d)| (e.to_vec(), rat_int(*n) / rat_int(*d))))
            .expect("arity matches")
    }
}
