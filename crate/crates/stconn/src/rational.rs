//! Exact rational values extended with a single point at infinity.
//!
//! Resistance and capacitance computations stay in `BigRational` end to end,
//! so identities like `R = 1/r` can be asserted with zero tolerance.
//! `Infinity` encodes "disconnected" for resistance and "connected" for
//! capacitance.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

pub type Rational = BigRational;

/// An exact fraction or the formal value `inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinity,
}

impl ExtendedRational {
    pub fn zero() -> Self {
        ExtendedRational::Finite(Rational::zero())
    }

    pub fn one() -> Self {
        ExtendedRational::Finite(Rational::one())
    }

    pub fn from_int(v: i64) -> Self {
        ExtendedRational::Finite(Rational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        ExtendedRational::Finite(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtendedRational::Finite(r) if r.is_zero())
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            ExtendedRational::Infinity => None,
        }
    }

    /// Reciprocal with the conventions `1/0 = inf` and `1/inf = 0`.
    pub fn recip(&self) -> Self {
        match self {
            ExtendedRational::Infinity => ExtendedRational::zero(),
            ExtendedRational::Finite(r) if r.is_zero() => ExtendedRational::Infinity,
            ExtendedRational::Finite(r) => ExtendedRational::Finite(r.recip()),
        }
    }

    /// Addition; infinity absorbs.
    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (ExtendedRational::Finite(a), ExtendedRational::Finite(b)) => {
                ExtendedRational::Finite(a + b)
            }
            _ => ExtendedRational::Infinity,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedRational::Finite(r) => r.to_f64().unwrap_or(f64::NAN),
            ExtendedRational::Infinity => f64::INFINITY,
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedRational::Infinity, ExtendedRational::Infinity) => Ordering::Equal,
            (ExtendedRational::Infinity, _) => Ordering::Greater,
            (_, ExtendedRational::Infinity) => Ordering::Less,
            (ExtendedRational::Finite(a), ExtendedRational::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Infinity => write!(f, "inf"),
            ExtendedRational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(ExtendedRational::Infinity);
        }
        let bad = |_| Error::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(bad)?;
                let q = BigInt::from_str(q.trim()).map_err(bad)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(ExtendedRational::Finite(Rational::new(p, q)))
            }
            None => {
                let p = BigInt::from_str(s.trim()).map_err(bad)?;
                Ok(ExtendedRational::Finite(Rational::from_integer(p)))
            }
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// `p/q` rendering for a plain rational.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Combines branch values by summing reciprocals: the resistance of a
/// parallel composition, or the capacitance of a series one.
pub fn harmonic_sum<'a, I: IntoIterator<Item = &'a ExtendedRational>>(vals: I) -> ExtendedRational {
    let mut conductance = Rational::zero();
    let mut all_infinite = true;
    for v in vals {
        match v {
            ExtendedRational::Infinity => {}
            ExtendedRational::Finite(r) => {
                all_infinite = false;
                if r.is_zero() {
                    return ExtendedRational::zero();
                }
                if r.is_negative() {
                    // Negative branch values never arise from energies.
                    debug_assert!(false, "negative branch value in harmonic_sum");
                }
                conductance += r.recip();
            }
        }
    }
    if all_infinite || conductance.is_zero() {
        ExtendedRational::Infinity
    } else {
        ExtendedRational::Finite(conductance.recip())
    }
}

/// Sum of branch values; infinity absorbs. Dual of [`harmonic_sum`].
pub fn plain_sum<'a, I: IntoIterator<Item = &'a ExtendedRational>>(vals: I) -> ExtendedRational {
    let mut acc = Rational::zero();
    for v in vals {
        match v {
            ExtendedRational::Infinity => return ExtendedRational::Infinity,
            ExtendedRational::Finite(r) => acc += r,
        }
    }
    ExtendedRational::Finite(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["1/1", "2/3", "-7/4", "inf"] {
            let v: ExtendedRational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!(
            "4/6".parse::<ExtendedRational>().unwrap().to_string(),
            "2/3"
        );
    }

    #[test]
    fn reciprocal_conventions() {
        assert_eq!(ExtendedRational::zero().recip(), ExtendedRational::Infinity);
        assert_eq!(ExtendedRational::Infinity.recip(), ExtendedRational::zero());
        assert_eq!(
            ExtendedRational::ratio(2, 3).recip(),
            ExtendedRational::ratio(3, 2)
        );
    }

    #[test]
    fn harmonic_of_two_units_is_half() {
        let one = ExtendedRational::one();
        assert_eq!(
            harmonic_sum([&one, &one]),
            ExtendedRational::ratio(1, 2)
        );
        assert_eq!(harmonic_sum([&one, &ExtendedRational::Infinity]), one);
        assert_eq!(
            harmonic_sum(std::iter::empty::<&ExtendedRational>()),
            ExtendedRational::Infinity
        );
    }

    #[test]
    fn ordering_puts_infinity_on_top() {
        let vals = [
            ExtendedRational::ratio(1, 2),
            ExtendedRational::Infinity,
            ExtendedRational::from_int(3),
        ];
        let max = vals.iter().max().unwrap();
        assert!(max.is_infinite());
    }
}
