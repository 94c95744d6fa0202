use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rational;
use crate::num::{rat_int, serde_str, Int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grlex,
    Custom,
}

/// A total order on `Z^n` given by `n` independent functionals, compared in sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    perm: Option<Vec<usize>>,
    weights: Option<Vec<i64>>,
    functionals: Vec<Vec<Rat>>,
    /// Each functional scaled to a primitive integer vector.
    scaled: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderJson {
    kind: OrderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nvars: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    perm: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "serde_str::rational_mat_opt")]
    functionals: Option<Vec<Vec<Rat>>>,
}

impl Serialize for TermOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OrderJson {
            kind: self.kind,
            nvars: None,
            perm: self.perm.clone(),
            weights: self.weights.clone(),
            functionals: (self.kind == OrderKind::Custom).then(|| self.functionals.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TermOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = OrderJson::deserialize(d)?;
        let built = match j.kind {
            OrderKind::Lex => match (j.perm, j.nvars) {
                (Some(p), _) => TermOrder::lex_perm(p),
                (None, Some(n)) => Ok(TermOrder::lex(n)),
                (None, None) => Err(Error::Input("lex order needs \"perm\" or \"nvars\"".into())),
            },
            OrderKind::Grlex => match j.weights {
                Some(w) => TermOrder::grlex(w),
                None => match j.nvars {
                    Some(n) => TermOrder::grlex(vec![1; n]),
                    None => Err(Error::Input("grlex order needs \"weights\" or \"nvars\"".into())),
                },
            },
            OrderKind::Custom => match j.functionals {
                Some(f) => TermOrder::custom(f),
                None => Err(Error::Input("custom order needs \"functionals\"".into())),
            },
        };
        built.map_err(serde::de::Error::custom)
    }
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    (0..n).map(|j| rat_int((i == j) as i64)).collect()
}

fn scale_to_i64(f: &[Rat]) -> Result<Vec<i64>> {
    let den = f.iter().fold(Int::from(1), |acc, x| acc.lcm(x.denom()));
    let nums: Vec<Int> = f.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let g = nums.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    nums.iter()
        .map(|x| (x / &g).to_i64().ok_or_else(|| Error::Input("term order functional is too large".into())))
        .collect()
}

impl TermOrder {
    fn build(kind: OrderKind, perm: Option<Vec<usize>>, weights: Option<Vec<i64>>, functionals: Vec<Vec<Rat>>) -> Result<TermOrder> {
        let n = functionals.len();
        if n == 0 {
            return Err(Error::Input("a term order needs at least one variable".into()));
        }
        if let Some(f) = functionals.iter().find(|f| f.len() != n) {
            return Err(Error::DimMismatch { expected: n, got: f.len() });
        }
        if rational::rank(&functionals) < n {
            return Err(Error::DependentOrder);
        }
        let scaled = functionals.iter().map(|f| scale_to_i64(f)).collect::<Result<_>>()?;
        Ok(TermOrder { kind, perm, weights, functionals, scaled })
    }

    /// Plain lexicographic order: the first coordinate decides.
    pub fn lex(n: usize) -> TermOrder {
        TermOrder::lex_perm((0..n).collect()).expect("identity permutation")
    }

    /// Lexicographic order reading coordinates `perm[0], perm[1], ...`.
    pub fn lex_perm(perm: Vec<usize>) -> Result<TermOrder> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Input(format!("{perm:?} is not a permutation")));
            }
        }
        let f = perm.iter().map(|&p| unit(n, p)).collect();
        TermOrder::build(OrderKind::Lex, Some(perm), None, f)
    }

    /// Weighted degree first, then lexicographic (dropping the last coordinate).
    pub fn grlex(weights: Vec<i64>) -> Result<TermOrder> {
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::Input("grlex weights must be positive".into()));
        }
        let n = weights.len();
        let mut f = vec![weights.iter().map(|&w| rat_int(w)).collect::<Vec<_>>()];
        f.extend((0..n.saturating_sub(1)).map(|i| unit(n, i)));
        TermOrder::build(OrderKind::Grlex, None, Some(weights), f)
    }

    /// Arbitrary list of rational functionals.
    pub fn custom(functionals: Vec<Vec<Rat>>) -> Result<TermOrder> {
        TermOrder::build(OrderKind::Custom, None, None, functionals)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.functionals.len()
    }

    pub fn functionals(&self) -> &[Vec<Rat>] {
        &self.functionals
    }

    /// Compares two exponents; `Equal` exactly when `a == b`.
    pub fn compare(&self, a: &[i64], b: &[i64]) -> Ordering {
        for f in &self.scaled {
            let d: i128 = f.iter().zip(a.iter().zip(b)).map(|(&w, (&x, &y))| w as i128 * (x as i128 - y as i128)).sum();
            match d.cmp(&0) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Whether every unit vector is positive, so the order well-orders `Z^n_{>=0}`.
    pub fn is_proper(&self) -> bool {
        let n = self.nvars();
        let zero = vec![0; n];
        (0..n).all(|i| {
            let mut e = zero.clone();
            e[i] = 1;
            self.compare(&e, &zero) == Ordering::Greater
        })
    }

    pub fn min<'a>(&self, xs: impl IntoIterator<Item = &'a Vec<i64>>) -> Option<&'a Vec<i64>> {
        xs.into_iter().min_by(|a, b| self.compare(a, b))
    }
}

/// Degree and exponent of `f t^k`, ordered so that larger degrees come first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedValue {
    pub exponent: Vec<i64>,
    pub degree: u64,
}

impl GradedValue {
    /// `(a, n) ≺ (b, m)` when `n > m`, or `n = m` and `a < b`.
    pub fn compare(&self, other: &GradedValue, order: &TermOrder) -> Ordering {
        other.degree.cmp(&self.degree).then_with(|| order.compare(&self.exponent, &other.exponent))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn lex_and_grlex() {
        let lex = TermOrder::lex(2);
        assert_eq!(lex.compare(&[1, 1], &[2, 0]), Ordering::Less);
        assert_eq!(lex.compare(&[3, -1], &[3, -1]), Ordering::Equal);
        let gr = TermOrder::grlex(vec![1, 1]).unwrap();
        assert_eq!(gr.compare(&[0, 1], &[2, 0]), Ordering::Less);
        assert_eq!(gr.compare(&[1, 0], &[0, 1]), Ordering::Greater);
        assert!(lex.is_proper() && gr.is_proper());
    }

    #[test]
    fn custom_orders() {
        assert_eq!(TermOrder::custom(vec![vec![rat_int(1), rat_int(1)], vec![rat_int(2), rat_int(2)]]), Err(Error::DependentOrder));
        let o = TermOrder::custom(vec![vec![rat(1, 2), rat(-1, 3)], vec![rat_int(0), rat_int(1)]]).unwrap();
        assert_eq!(o.compare(&[0, 3], &[0, 0]), Ordering::Less);
        assert!(!o.is_proper());
        let perm = TermOrder::lex_perm(vec![1, 0]).unwrap();
        assert_eq!(perm.compare(&[2, 0], &[1, 1]), Ordering::Less);
        assert!(TermOrder::lex_perm(vec![0, 0]).is_err());
    }

    #[test]
    fn graded_values() {
        let lex = TermOrder::lex(2);
        let a = GradedValue { exponent: vec![0, 0], degree: 2 };
        let b = GradedValue { exponent: vec![5, 5], degree: 1 };
        assert_eq!(a.compare(&b, &lex), Ordering::Less);
        let c = GradedValue { exponent: vec![1, 0], degree: 2 };
        assert_eq!(a.compare(&c, &lex), Ordering::Less);
    }

    #[test]
    fn json() {
        let o: TermOrder = serde_json::from_str(r#"{"kind":"lex","perm":[1,0]}"#).unwrap();
        assert_eq!(o, TermOrder::lex_perm(vec![1, 0]).unwrap());
        let g: TermOrder = serde_json::from_str(r#"{"kind":"grlex","weights":[1,2]}"#).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"kind":"grlex","weights":[1,2]}"#);
        let c: TermOrder = serde_json::from_str(r#"{"kind":"custom","functionals":[["1","1/2"],["0","1"]]}"#).unwrap();
        assert_eq!(c.functionals()[0][1], rat(1, 2));
    }
}
