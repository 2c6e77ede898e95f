//! Coefficient rings.
//!
//! Everything combinatorial in this crate is generic over a [`Ring`]; the
//! linear algebra additionally needs a [`Field`] with exact equality. The
//! concrete exact field used throughout is [`crate::Rational`].

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// A commutative ring with exact equality.
///
/// Blanket-implemented for every type providing the num-traits arithmetic
/// surface, so `i64`, `BigRational` and [`crate::LaurentPoly`] all qualify.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// A field in which zero tests are exact, suitable for Gaussian elimination.
pub trait Field: Ring + Div<Output = Self> {
    /// Cost used to pick pivots; smaller entries are preferred.
    fn pivot_weight(&self) -> u64;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn pivot_weight(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
}

/// Embeds an integer into any ring by double-and-add.
pub fn from_int<R: Ring>(n: i64) -> R {
    let mut acc = R::zero();
    let mut base = R::one();
    let mut m = n.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        m >>= 1;
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

/// `(-1)^e` in the ring.
pub fn sign<R: Ring>(e: usize) -> R {
    if e.is_multiple_of(2) {
        R::one()
    } else {
        -R::one()
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats a rational as `"num/den"`, always with an explicit denominator.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Scalars with a JSON representation.
pub trait JsonScalar: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

impl JsonScalar for BigRational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(rational_int(n.as_i64().unwrap())),
            other => Err(Error::Parse(format!("expected \"num/den\", got {other}"))),
        }
    }
}

impl JsonScalar for i64 {
    fn to_json(&self) -> Value {
        Value::from(*self)
    }

    fn from_json(value: &Value) -> Result<Self> {
        value
            .as_i64()
            .ok_or_else(|| Error::Parse(format!("expected integer, got {value}")))
    }
}

/// True when the rational is one of the roots of unity in Q, i.e. `±1`.
pub fn is_rational_root_of_unity(r: &BigRational) -> bool {
    r.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_sum() {
        assert_eq!(rational(1, 2) + rational(1, 3), rational(5, 6));
    }

    #[test]
    fn normal_form() {
        let r = rational(6, -4);
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&BigRational::zero()), "0/1");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["5/6", "-3/2", "0/1", "7/1"] {
            assert_eq!(format_rational(&parse_rational(text).unwrap()), text);
        }
        assert_eq!(parse_rational("4").unwrap(), rational_int(4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn integers_embed() {
        assert_eq!(from_int::<BigRational>(-13), rational_int(-13));
        assert_eq!(from_int::<i64>(1024), 1024);
        assert_eq!(from_int::<i64>(0), 0);
    }
}
