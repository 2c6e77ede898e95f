//! Laurent polynomials in a single variable `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, Field, JsonScalar, Ring};

/// A finite sum `Σ c_e q^e` with `e ∈ Z`, stored sparsely by exponent.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn monomial(coeff: C, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(exponent: i64) -> Self {
        Self::monomial(C::one(), exponent)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exponent) {
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.terms.insert(exponent, sum);
                }
            }
            None => {
                self.terms.insert(exponent, coeff);
            }
        }
    }

    pub fn coeff(&self, exponent: i64) -> C {
        self.terms.get(&exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn coefficient_sum(&self) -> C {
        self.terms.values().cloned().fold(C::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())))
    }
}

impl<C: Field> LaurentPoly<C> {
    /// Substitutes `q := q0` exactly. Fails for `q0 = 0`, where negative
    /// powers are undefined.
    pub fn eval(&self, q0: &C) -> Result<C> {
        if q0.is_zero() {
            return Err(Error::InvalidSpecialization {
                point: format!("{q0:?}"),
                reason: "q = 0 is not invertible".into(),
            });
        }
        let inv = q0.inv();
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let base = if *e < 0 { &inv } else { q0 };
            acc = acc + c.clone() * pow(base, e.unsigned_abs());
        }
        Ok(acc)
    }
}

fn pow<C: Ring>(base: &C, mut exp: u64) -> C {
    let mut acc = C::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        b = b.clone() * b;
        exp >>= 1;
    }
    acc
}

/// The balanced q-integer `[k] = q^{k-1} + q^{k-3} + ... + q^{1-k}`, which is
/// `(q^k - q^{-k}) / (q - q^{-1})`. `[0] = 0`.
pub fn q_integer<C: Ring>(k: u32) -> LaurentPoly<C> {
    let k = i64::from(k);
    LaurentPoly::from_terms((0..k).map(|j| (k - 1 - 2 * j, C::one())))
}

impl<C: Ring> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Add for LaurentPoly<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Ring> Neg for LaurentPoly<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Ring> Sub for LaurentPoly<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Mul for LaurentPoly<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let negative = c < &BigRational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("({})", format_rational(&mag))
            };
            match *e {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    if *e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Serialized as `{"exponent": coefficient}` with exponents as decimal strings.
impl<C: Ring + JsonScalar> JsonScalar for LaurentPoly<C> {
    fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (e, c) in &self.terms {
            map.insert(e.to_string(), c.to_json());
        }
        Value::Object(map)
    }

    fn from_json(value: &Value) -> Result<Self> {
        let map = value
            .as_object()
            .ok_or_else(|| Error::Parse(format!("expected exponent map, got {value}")))?;
        let mut p = Self::zero();
        for (key, c) in map {
            let e: i64 = key
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {key:?}")))?;
            p.add_term(e, C::from_json(c)?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, rational_int};

    type Q = LaurentPoly<BigRational>;

    fn q(e: i64) -> Q {
        Q::q_pow(e)
    }

    #[test]
    fn q_minus_q_inverse_times_three() {
        let lhs = (q(1) - q(-1)) * q_integer(3);
        assert_eq!(lhs, q(3) - q(-3));
    }

    #[test]
    fn zero_absorbs() {
        let p = q(4) + q(-2).scale(&rational(7, 3));
        assert!((p * Q::zero()).is_zero());
    }

    #[test]
    fn small_q_integers() {
        assert!(q_integer::<BigRational>(0).is_zero());
        assert_eq!(q_integer::<BigRational>(1), Q::one());
        assert_eq!(q_integer::<BigRational>(3), q(2) + Q::one() + q(-2));
    }

    // q^3 [3] (q^2 - 1) = q^6 - 1 after clearing negative powers; divide the
    // integer polynomials by schoolbook long division.
    #[test]
    fn q_integer_three_by_long_division() {
        fn long_div(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
            let mut rem = num.to_vec();
            let dl = den.len();
            let mut quot = vec![0; num.len() - dl + 1];
            for i in (0..quot.len()).rev() {
                let c = rem[i + dl - 1] / den[dl - 1];
                quot[i] = c;
                for j in 0..dl {
                    rem[i + j] -= c * den[j];
                }
            }
            (quot, rem)
        }
        // coefficients low to high
        let (quot, rem) = long_div(&[-1, 0, 0, 0, 0, 0, 1], &[-1, 0, 1]);
        assert!(rem.iter().all(|c| *c == 0));
        assert_eq!(quot, vec![1, 0, 1, 0, 1]);
        // quot is q^2 [3] in q^0..q^4
        let expected = Q::from_terms(
            quot.iter()
                .enumerate()
                .map(|(i, c)| (i as i64 - 2, rational_int(*c))),
        );
        assert_eq!(q_integer::<BigRational>(3), expected);
    }

    #[test]
    fn evaluation() {
        assert_eq!(q_integer::<BigRational>(3).eval(&rational_int(2)).unwrap(), rational(21, 4));
        assert_eq!(q(-1).eval(&rational_int(2)).unwrap(), rational(1, 2));
        let p = q(3).scale(&rational(2, 3)) - q(-5) + Q::constant(rational_int(4));
        assert_eq!(p.eval(&rational_int(1)).unwrap(), p.coefficient_sum());
        assert!(p.eval(&BigRational::zero()).is_err());
    }

    #[test]
    fn json_shape() {
        let p = q(-2).scale(&rational(1, 2)) + q(3);
        let v = p.to_json();
        assert_eq!(v.to_string(), r#"{"-2":"1/2","3":"1/1"}"#);
        assert_eq!(Q::from_json(&v).unwrap(), p);
    }

    #[test]
    fn display() {
        let p = q(2) + Q::one() + q(-2);
        assert_eq!(p.to_string(), "q^2 + 1 + q^-2");
        assert_eq!((q(1).scale(&rational(-1, 2)) - q(-1)).to_string(), "-(1/2)*q - q^-1");
    }
}
