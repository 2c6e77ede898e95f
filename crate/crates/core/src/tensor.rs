//! Vectors in the tensor power `V^{⊗k}` of the two-dimensional module
//! `V = span{x, y}`.
//!
//! A simple tensor is a `k`-bit mask: bit `i` describes tensor factor `i + 1`
//! (the leftmost factor is bit 0), and a set bit means `y`. As JSON the mask
//! is written `"0b…"` in ordinary binary, most significant bit first, so the
//! leftmost factor is the *last* digit.

use serde_json::{json, Value};

use crate::diagram::Subset;
use crate::error::{Error, Result};
use crate::scalar::{JsonScalar, Ring};
use crate::sparse::SparseVector;

/// Largest tensor power supported by the mask representation.
pub const MAX_TENSOR_POWER: usize = 24;

#[derive(Clone, Debug, PartialEq)]
pub struct TensorVector<R> {
    k: usize,
    coords: SparseVector<R>,
}

impl<R: Ring> TensorVector<R> {
    pub fn zero(k: usize) -> Self {
        assert!(k <= MAX_TENSOR_POWER, "tensor power {k} too large");
        Self { k, coords: SparseVector::zero(1 << k) }
    }

    pub fn basis(k: usize, mask: usize) -> Self {
        let mut v = Self::zero(k);
        v.coords.add_at(mask, R::one());
        v
    }

    /// The simple tensor with the given factors, `false` for `x` and `true` for `y`.
    pub fn simple(factors: &[bool]) -> Self {
        Self::basis(factors.len(), mask_of(factors))
    }

    pub fn from_coords(k: usize, coords: SparseVector<R>) -> Self {
        assert_eq!(coords.dim(), 1 << k, "coordinate vector has the wrong dimension");
        Self { k, coords }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coords(&self) -> &SparseVector<R> {
        &self.coords
    }

    pub fn into_coords(self) -> SparseVector<R> {
        self.coords
    }

    pub fn coeff(&self, mask: usize) -> R {
        self.coords.get(mask)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { k: self.k, coords: self.coords.scale(c) }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        Self { k: self.k, coords: self.coords.clone() + other.coords.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        Self { k: self.k, coords: self.coords.clone() - other.coords.clone() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &R)> + '_ {
        self.coords.entries()
    }
}

impl<R: Ring + JsonScalar> TensorVector<R> {
    /// `{"k": 4, "entries": [{"mask": "0b0100", "coeff": ...}]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .coords
            .entries()
            .map(|(m, c)| json!({ "mask": format_mask(self.k, m), "coeff": c.to_json() }))
            .collect();
        json!({ "k": self.k, "entries": entries })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let k = value
            .get("k")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing \"k\"".into()))? as usize;
        if k > MAX_TENSOR_POWER {
            return Err(Error::Parse(format!("tensor power {k} too large")));
        }
        let entries = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"entries\" array".into()))?;
        let mut coords = SparseVector::zero(1 << k);
        for e in entries {
            let mask = e
                .get("mask")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("entry without \"mask\"".into()))?;
            let mask = parse_mask(k, mask)?;
            coords.add_at(mask, R::from_json(e.get("coeff").unwrap_or(&Value::Null))?);
        }
        Ok(Self { k, coords })
    }
}

pub fn mask_of(factors: &[bool]) -> usize {
    factors
        .iter()
        .enumerate()
        .filter(|(_, y)| **y)
        .map(|(i, _)| 1usize << i)
        .sum()
}

pub fn format_mask(k: usize, mask: usize) -> String {
    if k == 0 {
        return "0b".into();
    }
    format!("0b{mask:0k$b}")
}

pub fn parse_mask(k: usize, text: &str) -> Result<usize> {
    let digits = text
        .strip_prefix("0b")
        .ok_or_else(|| Error::Parse(format!("mask {text:?} must start with 0b")))?;
    let mask = usize::from_str_radix(digits, 2).map_err(|_| Error::Parse(format!("bad mask {text:?}")))?;
    if mask >> k != 0 {
        return Err(Error::Parse(format!("mask {text:?} has more than {k} bits")));
    }
    Ok(mask)
}

/// `x⊗y⊗x` style rendering of a simple tensor.
pub fn basis_word(k: usize, mask: usize) -> String {
    (0..k)
        .map(|i| if mask >> i & 1 == 1 { "y" } else { "x" })
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Number of `y` factors strictly left of factor `i` (0-based).
pub fn y_before(mask: usize, i: usize) -> usize {
    (mask & ((1 << i) - 1)).count_ones() as usize
}

/// Mask of `y ⊗ u_s` in `V^{⊗k}`, where `u_s` has `x` in the positions of
/// `s ⊆ {1..k-1}` and `y` elsewhere.
pub fn y_tensor_u(s: &Subset, k: usize) -> usize {
    assert_eq!(s.n() + 1, k, "subset must live in 1..k-1");
    let mut mask = 1;
    for i in 1..k {
        if !s.contains(i) {
            mask |= 1 << i;
        }
    }
    mask
}

/// Mask of `x ⊗ u_s`.
pub fn x_tensor_u(s: &Subset, k: usize) -> usize {
    y_tensor_u(s, k) & !1
}
