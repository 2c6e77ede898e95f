//! Colored permutation diagrams and their correspondence with planar rook
//! diagrams.
//!
//! A colored diagram on `k` strands is a permutation whose strands are
//! colored `+` or `-` so that strands of equal color never cross, with the
//! first strand vertical and `+`. It is determined by its top and bottom
//! sign sequences `(θ, η)`. Ignoring the first strand and deleting the `-`
//! strands leaves a planar rook diagram on `k - 1` vertices.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::diagram::{binomial, enumerate_planar, PlanarRookDiagram, Subset};
use crate::error::{Error, Result};
use crate::report::ClaimReport;
use crate::rook_algebra::matrix_unit;
use crate::{Rational, RationalElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Plus,
    Minus,
}

impl Color {
    pub fn symbol(self) -> char {
        match self {
            Color::Plus => '+',
            Color::Minus => '-',
        }
    }

    fn parse(c: char) -> Result<Self> {
        match c {
            '+' => Ok(Color::Plus),
            // accept the typographic minus as well
            '-' | '−' => Ok(Color::Minus),
            other => Err(Error::InvalidLabel(format!("unknown sign {other:?}"))),
        }
    }
}

/// A sign sequence of length `k` starting with `+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignSequence(Vec<Color>);

impl SignSequence {
    pub fn new(signs: Vec<Color>) -> Result<Self> {
        match signs.first() {
            None => Err(Error::InvalidLabel("empty sign sequence".into())),
            Some(Color::Minus) => Err(Error::InvalidLabel("sign sequence must start with +".into())),
            Some(Color::Plus) => Ok(Self(signs)),
        }
    }

    /// `+` at position 1 and at `i + 1` for `i ∈ s`, `-` elsewhere.
    pub fn from_subset(s: &Subset) -> Self {
        let mut signs = vec![Color::Minus; s.n() + 1];
        signs[0] = Color::Plus;
        for &i in s.members() {
            signs[i] = Color::Plus;
        }
        Self(signs)
    }

    /// Positions `i ≥ 1` (0-based) carrying `+`, shifted down to a subset of `1..k-1`.
    pub fn to_subset(&self) -> Subset {
        let members = (1..self.k()).filter(|&i| self.0[i] == Color::Plus);
        Subset::new(self.k() - 1, members).expect("positions are in range")
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn signs(&self) -> &[Color] {
        &self.0
    }

    pub fn minus_count(&self) -> usize {
        self.0.iter().filter(|c| **c == Color::Minus).count()
    }

    /// All `2^{k-1}` sequences of length `k`, ordered by their subsets.
    pub fn all(k: usize) -> Vec<Self> {
        assert!(k >= 1, "sign sequences have length at least 1");
        Subset::all(k - 1).iter().map(Self::from_subset).collect()
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{}", c.symbol()))
    }
}

impl FromStr for SignSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.chars().map(Color::parse).collect::<Result<_>>()?)
    }
}

#[derive(Serialize, Deserialize)]
struct SignRepr {
    k: usize,
    signs: String,
}

impl Serialize for SignSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SignRepr { k: self.k(), signs: self.to_string() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SignRepr::deserialize(deserializer)?;
        let seq: SignSequence = repr.signs.parse().map_err(de::Error::custom)?;
        if seq.k() != repr.k {
            return Err(de::Error::custom(format!("k = {} but {} signs given", repr.k, seq.k())));
        }
        Ok(seq)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strand {
    pub top: usize,
    pub bottom: usize,
    pub color: Color,
}

impl Serialize for Strand {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(3))?;
        seq.serialize_element(&self.top)?;
        seq.serialize_element(&self.bottom)?;
        seq.serialize_element(&self.color.symbol().to_string())?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Strand {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (top, bottom, color): (usize, usize, String) = Deserialize::deserialize(deserializer)?;
        let mut chars = color.chars();
        let c = match (chars.next(), chars.next()) {
            (Some(c), None) => Color::parse(c).map_err(de::Error::custom)?,
            _ => return Err(de::Error::custom(format!("bad color {color:?}"))),
        };
        Ok(Strand { top, bottom, color: c })
    }
}

/// Strands sorted by top vertex; `strands[i].top == i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredPermDiagram {
    k: usize,
    strands: Vec<Strand>,
}

#[derive(Deserialize)]
struct ColoredRepr {
    k: usize,
    strands: Vec<Strand>,
}

impl<'de> Deserialize<'de> for ColoredPermDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ColoredRepr::deserialize(deserializer)?;
        ColoredPermDiagram::new(repr.k, repr.strands).map_err(de::Error::custom)
    }
}

impl ColoredPermDiagram {
    pub fn new(k: usize, strands: impl IntoIterator<Item = Strand>) -> Result<Self> {
        let mut strands: Vec<Strand> = strands.into_iter().collect();
        strands.sort();
        if k == 0 || strands.len() != k {
            return Err(Error::InvalidDiagram(format!("need exactly k = {k} strands, got {}", strands.len())));
        }
        let mut seen_bottom = vec![false; k + 1];
        for (i, s) in strands.iter().enumerate() {
            if s.top != i + 1 {
                return Err(Error::InvalidDiagram("tops must be a permutation of 1..k".into()));
            }
            if s.bottom == 0 || s.bottom > k || seen_bottom[s.bottom] {
                return Err(Error::InvalidDiagram("bottoms must be a permutation of 1..k".into()));
            }
            seen_bottom[s.bottom] = true;
        }
        if strands[0].bottom != 1 || strands[0].color != Color::Plus {
            return Err(Error::InvalidDiagram("the first strand must run 1 -> 1 colored +".into()));
        }
        let d = Self { k, strands };
        if let Some((a, b)) = d.same_color_crossing() {
            return Err(Error::InvalidDiagram(format!("strands from tops {} and {} have the same color and cross", a.top, b.top)));
        }
        Ok(d)
    }

    fn same_color_crossing(&self) -> Option<(Strand, Strand)> {
        for (i, a) in self.strands.iter().enumerate() {
            for b in &self.strands[i + 1..] {
                if a.color == b.color && a.bottom > b.bottom {
                    return Some((*a, *b));
                }
            }
        }
        None
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    /// Colors read along the top row.
    pub fn top_labels(&self) -> SignSequence {
        SignSequence(self.strands.iter().map(|s| s.color).collect())
    }

    /// Colors read along the bottom row.
    pub fn bottom_labels(&self) -> SignSequence {
        let mut signs = vec![Color::Plus; self.k];
        for s in &self.strands {
            signs[s.bottom - 1] = s.color;
        }
        SignSequence(signs)
    }

    /// Stack `self` on top of `other`: the strand leaving top `t` of `self`
    /// continues through `other`. Colors are inherited from `self` and must
    /// agree with `other` at every junction.
    pub fn concatenate(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::SizeMismatch { left: self.k, right: other.k });
        }
        let mut out = Vec::with_capacity(self.k);
        for s in &self.strands {
            let next = other.strands[s.bottom - 1];
            if next.color != s.color {
                return Err(Error::InvalidLabel(format!(
                    "color changes from {} to {} at middle vertex {}",
                    s.color.symbol(),
                    next.color.symbol(),
                    s.bottom
                )));
            }
            out.push(Strand { top: s.top, bottom: next.bottom, color: s.color });
        }
        Self::new(self.k, out)
    }

    /// Ignore the first strand and delete the `-` strands.
    pub fn to_planar_rook(&self) -> PlanarRookDiagram {
        let edges = self
            .strands
            .iter()
            .skip(1)
            .filter(|s| s.color == Color::Plus)
            .map(|s| (s.bottom - 1, s.top - 1));
        PlanarRookDiagram::new(self.k - 1, edges).expect("+ strands never cross")
    }
}

impl fmt::Display for ColoredPermDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.strands.iter().map(|s| format!("{}->{}{}", s.top, s.bottom, s.color.symbol())).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The colored diagram with top labels `θ` and bottom labels `η`: the `+`
/// positions of `θ` are matched in order with those of `η`, and likewise `-`.
pub fn colored_from_labels(theta: &SignSequence, eta: &SignSequence) -> Result<ColoredPermDiagram> {
    if theta.k() != eta.k() {
        return Err(Error::SizeMismatch { left: theta.k(), right: eta.k() });
    }
    if theta.minus_count() != eta.minus_count() {
        return Err(Error::InvalidLabel(format!(
            "{theta} and {eta} have different numbers of - signs"
        )));
    }
    let positions = |seq: &SignSequence, c: Color| -> Vec<usize> {
        seq.signs().iter().enumerate().filter(|(_, x)| **x == c).map(|(i, _)| i + 1).collect()
    };
    let mut strands = Vec::with_capacity(theta.k());
    for c in [Color::Plus, Color::Minus] {
        for (top, bottom) in positions(theta, c).into_iter().zip(positions(eta, c)) {
            strands.push(Strand { top, bottom, color: c });
        }
    }
    ColoredPermDiagram::new(theta.k(), strands)
}

/// Labels `(θ, η)` of the colored diagram corresponding to `d`.
pub fn from_planar_rook(d: &PlanarRookDiagram) -> (SignSequence, SignSequence) {
    (SignSequence::from_subset(&d.tops()), SignSequence::from_subset(&d.bottoms()))
}

/// Every valid label pair of length `k`, in order of `θ` then `η`.
pub fn label_pairs(k: usize) -> Vec<(SignSequence, SignSequence)> {
    let all = SignSequence::all(k);
    let mut out = Vec::new();
    for theta in &all {
        for eta in all.iter().filter(|eta| eta.minus_count() == theta.minus_count()) {
            out.push((theta.clone(), eta.clone()));
        }
    }
    out
}

/// Every colored diagram on `k` strands, one per label pair.
pub fn enumerate_colored(k: usize) -> Vec<ColoredPermDiagram> {
    label_pairs(k)
        .iter()
        .map(|(t, e)| colored_from_labels(t, e).expect("valid pair"))
        .collect()
}

fn value<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("serializable")
}

/// The correspondence with `P_{k-1}` is a bijection: both round trips are
/// identities and both sides have `C(2(k-1), k-1)` elements.
pub fn verify_bijection(k: usize) -> ClaimReport {
    assert!(k >= 1, "need at least one strand");
    let mut report = ClaimReport::new("colored-diagram-bijection").param("k", k);
    let expected = binomial(2 * (k as u64 - 1), k as u64 - 1) as usize;

    let colored = enumerate_colored(k);
    report.note("colored_diagrams", colored.len());
    report.check(colored.len() == expected, || json!({ "count": colored.len(), "expected": expected }));
    report.check_all(&colored, |c| {
        let d = c.to_planar_rook();
        let (theta, eta) = from_planar_rook(&d);
        let labels_ok = theta == c.top_labels() && eta == c.bottom_labels();
        let back = colored_from_labels(&theta, &eta).ok();
        (!labels_ok || back.as_ref() != Some(c)).then(|| json!({ "colored": value(c), "planar": value(&d) }))
    });

    let planar = enumerate_planar(k - 1, None);
    report.check(planar.len() == expected, || json!({ "planar_count": planar.len(), "expected": expected }));
    report.check_all(&planar, |d| {
        let (theta, eta) = from_planar_rook(d);
        match colored_from_labels(&theta, &eta) {
            Ok(c) if c.to_planar_rook() == *d => None,
            Ok(c) => Some(json!({ "planar": value(d), "round_trip": value(&c.to_planar_rook()) })),
            Err(e) => Some(json!({ "planar": value(d), "error": e.to_string() })),
        }
    });
    report
}

/// For every ordered pair of colored diagrams, the rule
/// `E_{θ1,η1} E_{θ2,η2} = δ_{η1,θ2} E_{θ1,η2}` is carried to the product
/// `X_{d1} X_{d2}` computed in the rook algebra, and when `η1 = θ2` the
/// actual concatenation of the diagrams is `E_{θ1,η2}`.
pub fn verify_product_correspondence(k: usize) -> ClaimReport {
    assert!(k >= 1, "need at least one strand");
    let colored = enumerate_colored(k);
    let images: Vec<PlanarRookDiagram> = colored.iter().map(|c| c.to_planar_rook()).collect();
    let units: Vec<RationalElement> = images.iter().map(matrix_unit::<Rational>).collect();
    let n = colored.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut report = ClaimReport::new("colored-product-rule").param("k", k);
    report.check_all(&pairs, |&(i, j)| {
        let (c1, c2) = (&colored[i], &colored[j]);
        let (d1, d2) = (&images[i], &images[j]);
        let witness = |what: &str| Some(json!({ "c1": value(c1), "c2": value(c2), "failed": what }));
        let composable = c1.bottom_labels() == c2.top_labels();
        if composable != (d1.bottoms() == d2.tops()) {
            return witness("label match differs from subset match");
        }
        let product = &units[i] * &units[j];
        let expected = if composable {
            let c3 = match colored_from_labels(&c1.top_labels(), &c2.bottom_labels()) {
                Ok(c3) => c3,
                Err(_) => return witness("label rule"),
            };
            if c1.concatenate(c2).ok().as_ref() != Some(&c3) {
                return witness("concatenation");
            }
            matrix_unit(&c3.to_planar_rook())
        } else {
            RationalElement::zero(k - 1)
        };
        (product != expected).then(|| json!({ "c1": value(c1), "c2": value(c2), "product": product.to_json() }))
    });
    report.note("products", pairs.len());
    report
}

/// The displayed instance: labels `(+++---, +-+-+-)` give the strands
/// `1→1+ 2→3+ 3→5+ 4→2- 5→4- 6→6-` and the planar diagram `{(2,1),(4,2)}`.
pub fn verify_displayed_instance() -> ClaimReport {
    let mut report = ClaimReport::new("colored-displayed-instance");
    let theta: SignSequence = "+++---".parse().expect("valid");
    let eta: SignSequence = "+-+-+-".parse().expect("valid");
    let c = colored_from_labels(&theta, &eta).expect("valid pair");
    let expected = [(1, 1, Color::Plus), (2, 3, Color::Plus), (3, 5, Color::Plus), (4, 2, Color::Minus), (5, 4, Color::Minus), (6, 6, Color::Minus)]
        .map(|(top, bottom, color)| Strand { top, bottom, color });
    report.check(c.strands() == expected, || json!({ "strands": value(&c) }));
    let d = c.to_planar_rook();
    let target = PlanarRookDiagram::new(5, [(2, 1), (4, 2)]).expect("valid");
    report.check(d == target, || json!({ "planar": value(&d) }));
    report.check(from_planar_rook(&target) == (theta, eta), || json!({ "inverse": "labels differ" }));
    report
}
