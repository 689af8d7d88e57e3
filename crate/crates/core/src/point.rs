//! Exponent vectors: integer lattice points of `M = Z^d` and exact rational points.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the character lattice, i.e. the exponent vector of a Laurent monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<BigInt>);

/// A point with exact rational coordinates, always kept in reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint(Vec<BigRational>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        LatticePoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &LatticePoint) -> BigInt {
        dot(&self.0, &other.0)
    }

    pub fn to_rat(&self) -> RatPoint {
        RatPoint(self.0.iter().cloned().map(BigRational::from_integer).collect())
    }

    /// Content of the vector: gcd of the entries (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        content(&self.0)
    }

    /// Divides out the content; the zero vector is returned unchanged.
    pub fn primitive(&self) -> LatticePoint {
        LatticePoint(primitive(&self.0))
    }

    pub fn scale(&self, k: &BigInt) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| c * k).collect())
    }

    /// Appends one coordinate (used when adjoining a variable).
    pub fn extended(&self, last: BigInt) -> LatticePoint {
        let mut coords = self.0.clone();
        coords.push(last);
        LatticePoint(coords)
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl RatPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RatPoint(coords)
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        RatPoint(coords.iter().map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dot_int(&self, normal: &[BigInt]) -> BigRational {
        self.0
            .iter()
            .zip(normal)
            .map(|(x, f)| x * BigRational::from_integer(f.clone()))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    pub fn scale(&self, k: &BigRational) -> RatPoint {
        RatPoint(self.0.iter().map(|c| c * k).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// The lattice point with the same coordinates, if all of them are integers.
    pub fn to_lattice(&self) -> Option<LatticePoint> {
        if self.is_integral() {
            Some(LatticePoint(self.0.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }

    /// Least common multiple of the denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

pub(crate) fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        v.to_vec()
    } else {
        v.iter().map(|c| c / &g).collect()
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for &RatPoint {
    type Output = RatPoint;
    fn add(self, rhs: &RatPoint) -> RatPoint {
        RatPoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatPoint {
    type Output = RatPoint;
    fn sub(self, rhs: &RatPoint) -> RatPoint {
        RatPoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(coords: [i64; N]) -> Self {
        LatticePoint::from_i64s(&coords)
    }
}

impl From<&LatticePoint> for RatPoint {
    fn from(p: &LatticePoint) -> Self {
        p.to_rat()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses "p", "-p" or "p/q" into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Always `p/q`, with `q = 1` for integers.
pub(crate) fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

// Serialization: integers as JSON numbers when they fit in i64, decimal strings
// otherwise; rationals always as "p/q" strings.

pub(crate) fn serialize_int<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

struct IntVisitor;

impl<'de> Visitor<'de> for IntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<BigInt, E> {
        v.trim().parse().map_err(|_| E::custom(format!("invalid integer {v:?}")))
    }
}

pub(crate) fn deserialize_int<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
    d.deserialize_any(IntVisitor)
}

#[derive(Serialize, Deserialize)]
struct IntRepr(#[serde(serialize_with = "serialize_int", deserialize_with = "deserialize_int")] BigInt);

pub(crate) mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rational_string(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| de::Error::custom(format!("invalid rational {s:?}")))
    }
}

pub(crate) mod rational_vec_serde {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&rational_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigRational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).ok_or_else(|| de::Error::custom(format!("invalid rational {s:?}"))))
            .collect()
    }
}

pub(crate) mod int_vec_serde {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for c in v {
            seq.serialize_element(&IntRepr(c.clone()))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        struct SeqVisitor;
        impl<'de> Visitor<'de> for SeqVisitor {
            type Value = Vec<BigInt>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Vec<BigInt>, A::Error> {
                let mut out = Vec::new();
                while let Some(IntRepr(x)) = seq.next_element()? {
                    out.push(x);
                }
                Ok(out)
            }
        }
        d.deserialize_seq(SeqVisitor)
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        int_vec_serde::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        int_vec_serde::deserialize(d).map(LatticePoint)
    }
}

impl Serialize for RatPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational_vec_serde::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for RatPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        rational_vec_serde::deserialize(d).map(RatPoint)
    }
}

/// Floor of a rational as an integer.
pub(crate) fn floor(r: &BigRational) -> BigInt {
    r.floor().to_integer()
}

/// Ceiling of a rational as an integer.
pub(crate) fn ceil(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}
