//! Exact numeric carriers and the string encodings used in every JSON format.
//!
//! Integers serialize as decimal strings and rationals as `"p/q"` (or `"p"`
//! when the denominator is one) so that readers never have to fit a value
//! into a 64-bit float.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rat_from_int(v: &Int) -> Rat {
    BigRational::from_integer(v.clone())
}

pub fn factorial(n: usize) -> Int {
    (1..=n as u64).fold(Int::one(), |acc, k| acc * k)
}

pub fn format_rational(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: Int = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

pub fn parse_int(s: &str) -> Result<Int> {
    s.trim()
        .parse()
        .map_err(|_| Error::Input(format!("not an integer: {s:?}")))
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Least common multiple of the denominators of `v`.
pub fn common_denominator(v: &[Rat]) -> Int {
    v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn primitive_direction(v: &[Rat]) -> Vec<Int> {
    let den = common_denominator(v);
    let scaled: Vec<Int> = v.iter().map(|x| (x * rat_from_int(&den)).to_integer()).collect();
    primitive(&scaled)
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Exact rational `n`-th root of a non-negative rational, if it exists.
pub fn rational_nth_root(r: &Rat, n: u32) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let p = r.numer().nth_root(n);
    let q = r.denom().nth_root(n);
    if num_traits::pow(p.clone(), n as usize) == *r.numer() && num_traits::pow(q.clone(), n as usize) == *r.denom() {
        Some(BigRational::new(p, q))
    } else {
        None
    }
}

/// Rational bounds `[lo, hi]` on the real `n`-th root of `r >= 0` with width `2^-bits`.
fn root_bounds(r: &Rat, n: u32, bits: u32) -> (Rat, Rat) {
    let scale = Int::one() << (bits as usize * n as usize);
    let floor = (r.numer() * &scale).div_floor(r.denom());
    let s = floor.nth_root(n);
    let unit = Int::one() << bits as usize;
    (
        BigRational::new(s.clone(), unit.clone()),
        BigRational::new(s + 1, unit),
    )
}

/// Compares `sum_i lhs_i^(1/n)` against `sum_j rhs_j^(1/n)` for non-negative
/// rational radicands, exactly.
///
/// Equality is decided first: radicands whose ratio is a perfect `n`-th power
/// are grouped into classes, and real `n`-th roots from distinct classes are
/// linearly independent over the rationals, so the sums agree iff each class
/// cancels. Otherwise interval refinement terminates with the strict sign.
pub fn compare_root_sums(lhs: &[Rat], rhs: &[Rat], n: u32) -> Ordering {
    assert!(n >= 1);
    let terms: Vec<(i32, &Rat)> = lhs
        .iter()
        .map(|r| (1, r))
        .chain(rhs.iter().map(|r| (-1, r)))
        .filter(|(_, r)| !r.is_zero())
        .collect();
    for (_, r) in &terms {
        assert!(!r.is_negative(), "radicands must be non-negative");
    }

    let mut classes: Vec<(Rat, Rat)> = Vec::new();
    for &(sign, r) in &terms {
        let mut placed = false;
        for (rep, total) in classes.iter_mut() {
            if let Some(t) = rational_nth_root(&(r / &*rep), n) {
                *total += if sign > 0 { t } else { -t };
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((r.clone(), if sign > 0 { Rat::one() } else { -Rat::one() }));
        }
    }
    if classes.iter().all(|(_, total)| total.is_zero()) {
        return Ordering::Equal;
    }

    let mut bits = 16u32;
    loop {
        let (mut llo, mut lhi) = (Rat::zero(), Rat::zero());
        let (mut rlo, mut rhi) = (Rat::zero(), Rat::zero());
        for &(sign, r) in &terms {
            let (lo, hi) = match rational_nth_root(r, n) {
                Some(exact) => (exact.clone(), exact),
                None => root_bounds(r, n, bits),
            };
            if sign > 0 {
                llo += lo;
                lhi += hi;
            } else {
                rlo += lo;
                rhi += hi;
            }
        }
        if lhi < rlo {
            return Ordering::Less;
        }
        if llo > rhi {
            return Ordering::Greater;
        }
        bits *= 2;
    }
}

/// Serde adapters for the string encodings.
pub mod serde_str {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Loose {
        Str(String),
        Int(i64),
    }

    impl Loose {
        fn rational(self) -> Result<Rat> {
            match self {
                Loose::Str(s) => parse_rational(&s),
                Loose::Int(v) => Ok(rat_int(v)),
            }
        }
        fn integer(self) -> Result<Int> {
            match self {
                Loose::Str(s) => parse_int(&s),
                Loose::Int(v) => Ok(int(v)),
            }
        }
    }

    pub mod rational {
        use super::*;
        pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
            s.serialize_str(&format_rational(r))
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
            Loose::deserialize(d)?.rational().map_err(D::Error::custom)
        }
    }

    pub mod rational_opt {
        use super::*;
        pub fn serialize<S: Serializer>(r: &Option<Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_str(&format_rational(r)),
                None => s.serialize_none(),
            }
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rat>, D::Error> {
            Option::<Loose>::deserialize(d)?
                .map(|l| l.rational().map_err(D::Error::custom))
                .transpose()
        }
    }

    pub mod rational_vec {
        use super::*;
        use serde::ser::SerializeSeq;
        pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rat>, D::Error> {
            Vec::<Loose>::deserialize(d)?
                .into_iter()
                .map(|l| l.rational().map_err(D::Error::custom))
                .collect()
        }
    }

    pub mod rational_mat {
        use super::*;
        pub fn serialize<S: Serializer>(m: &[Vec<Rat>], s: S) -> std::result::Result<S::Ok, S::Error> {
            let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(format_rational).collect()).collect();
            serde::Serialize::serialize(&rows, s)
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rat>>, D::Error> {
            Vec::<Vec<Loose>>::deserialize(d)?
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|l| l.rational().map_err(D::Error::custom))
                        .collect()
                })
                .collect()
        }
    }

    pub mod rational_mat_opt {
        use super::*;
        pub fn serialize<S: Serializer>(m: &Option<Vec<Vec<Rat>>>, s: S) -> std::result::Result<S::Ok, S::Error> {
            match m {
                Some(m) => super::rational_mat::serialize(m, s),
                None => s.serialize_none(),
            }
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Vec<Vec<Rat>>>, D::Error> {
            Option::<Vec<Vec<Loose>>>::deserialize(d)?
                .map(|rows| {
                    rows.into_iter()
                        .map(|row| row.into_iter().map(|l| l.rational().map_err(D::Error::custom)).collect())
                        .collect()
                })
                .transpose()
        }
    }

    pub mod integer {
        use super::*;
        pub fn serialize<S: Serializer>(v: &Int, s: S) -> std::result::Result<S::Ok, S::Error> {
            s.serialize_str(&v.to_string())
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Int, D::Error> {
            Loose::deserialize(d)?.integer().map_err(D::Error::custom)
        }
    }

    pub mod integer_mat {
        use super::*;
        pub fn serialize<S: Serializer>(m: &[Vec<Int>], s: S) -> std::result::Result<S::Ok, S::Error> {
            let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            serde::Serialize::serialize(&rows, s)
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Int>>, D::Error> {
            Vec::<Vec<Loose>>::deserialize(d)?
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|l| l.integer().map_err(D::Error::custom))
                        .collect()
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat_int(-7));
        assert_eq!(format_rational(&rat(3, 2)), "3/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rational_nth_root(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(rational_nth_root(&rat(2, 1), 2), None);
        assert_eq!(rational_nth_root(&rat(0, 1), 5), Some(rat(0, 1)));
    }

    #[test]
    fn root_sum_comparisons() {
        // 1 + 1 = sqrt(4)
        assert_eq!(compare_root_sums(&[rat_int(1), rat_int(1)], &[rat_int(4)], 2), Ordering::Equal);
        // 1 + sqrt(1/2) < sqrt(7/2)
        assert_eq!(compare_root_sums(&[rat_int(1), rat(1, 2)], &[rat(7, 2)], 2), Ordering::Less);
        // sqrt(2) + sqrt(8) = sqrt(18)
        assert_eq!(compare_root_sums(&[rat_int(2), rat_int(8)], &[rat_int(18)], 2), Ordering::Equal);
        // sqrt(2) + sqrt(3) > sqrt(9.89)
        assert_eq!(compare_root_sums(&[rat_int(2), rat_int(3)], &[rat(989, 100)], 2), Ordering::Greater);
        // cube roots: 2^(1/3) + 2^(1/3) = 16^(1/3)
        assert_eq!(compare_root_sums(&[rat_int(2), rat_int(2)], &[rat_int(16)], 3), Ordering::Equal);
        assert_eq!(compare_root_sums(&[rat_int(2), rat_int(2)], &[rat_int(17)], 3), Ordering::Less);
        assert_eq!(compare_root_sums(&[], &[], 2), Ordering::Equal);
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive(&[int(4), int(-6), int(0)]), vec![int(2), int(-3), int(0)]);
        assert_eq!(primitive_direction(&[rat(1, 2), rat(1, 3)]), vec![int(3), int(2)]);
    }
}
