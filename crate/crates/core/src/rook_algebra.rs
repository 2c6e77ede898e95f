//! The planar rook algebra: formal linear combinations of planar diagrams,
//! its matrix units, and its modules `M_ℓ` spanned by `ℓ`-element subsets.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde_json::{json, Value};

use crate::diagram::{binomial, enumerate_planar, PlanarRookDiagram, Subset};
use crate::error::{Error, Result};
use crate::linalg::span_dimension;
use crate::report::ClaimReport;
use crate::scalar::{sign, JsonScalar, Ring};
use crate::sparse::{SparseMatrix, SparseVector};
use crate::Rational;

/// `Σ c_d d` over planar diagrams on `n` vertices. Terms are kept in diagram
/// enumeration order and never carry a zero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<R> {
    n: usize,
    terms: BTreeMap<PlanarRookDiagram, R>,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn basis(d: PlanarRookDiagram) -> Self {
        Self::term(d, R::one())
    }

    pub fn term(d: PlanarRookDiagram, c: R) -> Self {
        let mut e = Self::zero(d.n());
        e.add_term(d, c);
        e
    }

    /// The unit: the diagram with `n` vertical edges.
    pub fn one(n: usize) -> Self {
        Self::basis(PlanarRookDiagram::identity(n))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (PlanarRookDiagram, R)>) -> Result<Self> {
        let mut e = Self::zero(n);
        for (d, c) in terms {
            if d.n() != n {
                return Err(Error::SizeMismatch { left: n, right: d.n() });
            }
            e.add_term(d, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, d: PlanarRookDiagram, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&d) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(d, s);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &PlanarRookDiagram) -> R {
        self.terms.get(d).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarRookDiagram, &R)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.n);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), c.clone() * x.clone());
        }
        out
    }

    /// Bilinear extension of diagram composition.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.compose(b)?, x.clone() * y.clone());
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    /// Matrix of the element acting on `M_ℓ`.
    pub fn module_matrix(&self, l: usize) -> SparseMatrix<R> {
        let dim = binomial(self.n as u64, l as u64) as usize;
        let mut acc = SparseMatrix::zero(dim, dim);
        for (d, c) in &self.terms {
            acc = acc + module_action_matrix(d, l).scale(c);
        }
        acc
    }
}

impl<R: Ring> Add for AlgebraElement<R> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("algebra elements of different sizes")
    }
}

impl<R: Ring> Neg for AlgebraElement<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { n: self.n, terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect() }
    }
}

impl<R: Ring> Sub for AlgebraElement<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;

    fn mul(self, rhs: Self) -> AlgebraElement<R> {
        self.product(rhs).expect("algebra elements of different sizes")
    }
}

impl<R: Ring + JsonScalar> AlgebraElement<R> {
    /// `{"n": 3, "terms": [{"diagram": {...}, "coeff": ...}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(d, c)| json!({ "diagram": serde_json::to_value(d).expect("diagram serializes"), "coeff": c.to_json() }))
            .collect();
        json!({ "n": self.n, "terms": terms })
    }

    /// Accepts an algebra element document, or a bare diagram (coefficient 1).
    pub fn from_json(value: &Value) -> Result<Self> {
        if value.get("edges").is_some() {
            let d: PlanarRookDiagram =
                serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            return Ok(Self::basis(d));
        }
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing \"n\"".into()))? as usize;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"terms\" array".into()))?;
        let mut out = Self::zero(n);
        for (i, t) in terms.iter().enumerate() {
            let d: PlanarRookDiagram = serde_json::from_value(t.get("diagram").cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::Parse(format!("term {i}: {e}")))?;
            if d.n() != n {
                return Err(Error::SizeMismatch { left: n, right: d.n() });
            }
            let c = R::from_json(t.get("coeff").unwrap_or(&Value::Null))
                .map_err(|e| Error::Parse(format!("term {i}: {e}")))?;
            out.add_term(d, c);
        }
        Ok(out)
    }
}

/// `X_d = Σ_{d' ⊆ d} (-1)^{|d \ d'|} d'`.
pub fn matrix_unit<R: Ring>(d: &PlanarRookDiagram) -> AlgebraElement<R> {
    let mut out = AlgebraElement::zero(d.n());
    for (sub, deleted) in d.subdiagrams() {
        out.add_term(sub, sign(deleted));
    }
    out
}

/// What the matrix-unit rule predicts for `X_{d1} X_{d2}`: `X_{d3}` when
/// `β(d1) = τ(d2)`, where `d3` has bottom `β(d2)` and top `τ(d1)`; else zero.
pub fn matrix_unit_rule<R: Ring>(d1: &PlanarRookDiagram, d2: &PlanarRookDiagram) -> Result<AlgebraElement<R>> {
    if d1.n() != d2.n() {
        return Err(Error::SizeMismatch { left: d1.n(), right: d2.n() });
    }
    if d1.bottoms() != d2.tops() {
        return Ok(AlgebraElement::zero(d1.n()));
    }
    let d3 = PlanarRookDiagram::canonical(&d2.bottoms(), &d1.tops())?;
    Ok(matrix_unit(&d3))
}

fn matrix_unit_witness(d1: &PlanarRookDiagram, d2: &PlanarRookDiagram) -> Option<Value> {
    let lhs = &matrix_unit::<Rational>(d1) * &matrix_unit(d2);
    let rhs = matrix_unit_rule::<Rational>(d1, d2).expect("same size");
    (lhs != rhs).then(|| {
        json!({
            "d1": serde_json::to_value(d1).unwrap(),
            "d2": serde_json::to_value(d2).unwrap(),
            "product": lhs.to_json(),
            "expected": rhs.to_json(),
        })
    })
}

/// Checks `X_{d1} X_{d2} = δ_{β(d1),τ(d2)} X_{d3}` over all ordered pairs.
pub fn verify_matrix_unit_rule(n: usize) -> ClaimReport {
    let diagrams = enumerate_planar(n, None);
    let pairs: Vec<(&PlanarRookDiagram, &PlanarRookDiagram)> =
        diagrams.iter().flat_map(|a| diagrams.iter().map(move |b| (a, b))).collect();
    let mut report = ClaimReport::new("matrix-unit-rule").param("n", n).param("mode", "exhaustive");
    report.check_all(&pairs, |(a, b)| matrix_unit_witness(a, b));
    report
}

/// Same rule on `samples` uniformly random ordered pairs.
pub fn verify_matrix_unit_rule_sampled(n: usize, samples: usize, rng: &mut impl Rng) -> ClaimReport {
    let diagrams = enumerate_planar(n, None);
    let pairs: Vec<(&PlanarRookDiagram, &PlanarRookDiagram)> = (0..samples)
        .map(|_| (&diagrams[rng.gen_range(0..diagrams.len())], &diagrams[rng.gen_range(0..diagrams.len())]))
        .collect();
    let mut report = ClaimReport::new("matrix-unit-rule")
        .param("n", n)
        .param("mode", "sampled")
        .param("samples", samples);
    report.check_all(&pairs, |(a, b)| matrix_unit_witness(a, b));
    report
}

/// Checks `Σ_{d' ⊆ d} X_{d'} = d` for every planar `d`.
pub fn verify_mobius_inversion(n: usize) -> ClaimReport {
    let diagrams = enumerate_planar(n, None);
    let mut report = ClaimReport::new("mobius-inversion").param("n", n);
    report.check_all(&diagrams, |d| {
        let mut sum = AlgebraElement::<Rational>::zero(n);
        for (sub, _) in d.subdiagrams() {
            sum = sum + matrix_unit(&sub);
        }
        (sum != AlgebraElement::basis(d.clone())).then(|| json!({ "d": serde_json::to_value(d).unwrap(), "sum": sum.to_json() }))
    });
    report
}

/// Index of `s` among the `|s|`-element subsets in lexicographic order.
fn subset_index(basis: &[Subset], s: &Subset) -> usize {
    basis
        .binary_search_by(|b| b.members().cmp(s.members()))
        .expect("subset belongs to the basis")
}

/// Matrix of `d` on `M_ℓ` in the lexicographic `m_s` basis. Column `s` holds a
/// single 1 in row `d(s)`, or is zero when `s ⊄ β(d)`.
pub fn module_action_matrix<R: Ring>(d: &PlanarRookDiagram, l: usize) -> SparseMatrix<R> {
    let basis = Subset::all_of_size(d.n(), l);
    let mut m = SparseMatrix::zero(basis.len(), basis.len());
    for (col, s) in basis.iter().enumerate() {
        if let Some(image) = d.apply_to_subset(s).expect("sizes agree") {
            m.add_at(subset_index(&basis, &image), col, R::one());
        }
    }
    m
}

/// Action on the full module `M = ⊕ M_ℓ`, as a map on formal subset vectors.
pub fn act_on_subsets<R: Ring>(d: &PlanarRookDiagram, v: &BTreeMap<Subset, R>) -> BTreeMap<Subset, R> {
    let mut out: BTreeMap<Subset, R> = BTreeMap::new();
    for (s, c) in v {
        if let Some(image) = d.apply_to_subset(s).expect("sizes agree") {
            let slot = out.entry(image).or_insert_with(R::zero);
            *slot = slot.clone() + c.clone();
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `matrix(d1 d2, ℓ) = matrix(d1, ℓ) matrix(d2, ℓ)` over all pairs and all ℓ.
pub fn verify_module_multiplicativity(n: usize) -> ClaimReport {
    let diagrams = enumerate_planar(n, None);
    let mats: Vec<Vec<SparseMatrix<i64>>> = diagrams
        .iter()
        .map(|d| (0..=n).map(|l| module_action_matrix(d, l)).collect())
        .collect();
    let pairs: Vec<(usize, usize)> = (0..diagrams.len())
        .flat_map(|i| (0..diagrams.len()).map(move |j| (i, j)))
        .collect();
    let mut report = ClaimReport::new("module-multiplicativity").param("n", n);
    report.check_all(&pairs, |&(i, j)| {
        let prod = diagrams[i].compose(&diagrams[j]).expect("same size");
        (0..=n).find_map(|l| {
            let lhs: SparseMatrix<i64> = module_action_matrix(&prod, l);
            (lhs != &mats[i][l] * &mats[j][l]).then(|| {
                json!({
                    "d1": serde_json::to_value(&diagrams[i]).unwrap(),
                    "d2": serde_json::to_value(&diagrams[j]).unwrap(),
                    "l": l,
                })
            })
        })
    });
    report
}

/// Burnside certificate that `M_ℓ` is irreducible: the matrices of all planar
/// diagrams span the full matrix algebra `Mat_{C(n,ℓ)}`.
pub fn verify_irreducibility(n: usize, l: usize) -> ClaimReport {
    let dim = binomial(n as u64, l as u64) as usize;
    let vectors: Vec<SparseVector<Rational>> = enumerate_planar(n, None)
        .iter()
        .map(|d| module_action_matrix(d, l).flatten())
        .collect();
    let span = span_dimension(&vectors);
    let mut report = ClaimReport::new("irreducibility").param("n", n).param("l", l);
    report.note("span_dimension", span);
    report.note("expected", dim * dim);
    report.check(span == dim * dim, || json!({ "span_dimension": span, "expected": dim * dim }));
    report
}

/// Certifies `CP_n ≅ ⊕_ℓ Mat_{C(n,ℓ)}`: the dimension count
/// `Σ C(n,ℓ)^2 = C(2n,n)` together with injectivity of the joint
/// representation `d ↦ ⊕_ℓ matrix(d, ℓ)`.
pub fn verify_semisimplicity(n: usize) -> ClaimReport {
    let diagrams = enumerate_planar(n, None);
    let square_sum: u64 = (0..=n as u64).map(|l| binomial(n as u64, l).pow(2)).sum();
    let central = binomial(2 * n as u64, n as u64);
    let mut report = ClaimReport::new("semisimplicity").param("n", n);
    report.check(square_sum == central && diagrams.len() as u64 == central, || {
        json!({ "sum_of_squares": square_sum, "central_binomial": central, "diagrams": diagrams.len() })
    });

    let blocks: Vec<usize> = (0..=n).map(|l| binomial(n as u64, l as u64).pow(2) as usize).collect();
    let width: usize = blocks.iter().sum();
    let rows: Vec<SparseVector<Rational>> = diagrams
        .iter()
        .map(|d| {
            let mut offset = 0;
            let mut entries = Vec::new();
            for (l, block) in blocks.iter().enumerate() {
                entries.extend(module_action_matrix::<Rational>(d, l).flatten().entries().map(|(i, x)| (offset + i, x.clone())));
                offset += block;
            }
            SparseVector::from_entries(width, entries)
        })
        .collect();
    let rank = span_dimension(&rows);
    report.note("joint_rank", rank);
    report.check(rank == diagrams.len(), || json!({ "joint_rank": rank, "diagrams": diagrams.len() }));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational_int;

    type Elt = AlgebraElement<Rational>;

    fn planar(n: usize, edges: &[(usize, usize)]) -> PlanarRookDiagram {
        PlanarRookDiagram::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn basis_products() {
        let a = planar(3, &[(1, 2), (2, 3)]);
        let b = planar(3, &[(2, 1), (3, 2)]);
        let p = &Elt::term(a.clone(), rational_int(2)) * &Elt::term(b.clone(), rational_int(3));
        assert_eq!(p, Elt::term(a.compose(&b).unwrap(), rational_int(6)));
        let x = Elt::basis(a) + Elt::term(b, rational_int(-4));
        assert_eq!(&Elt::one(3) * &x, x);
        assert_eq!(&x * &Elt::one(3), x);
        assert!(Elt::one(3).product(&Elt::one(2)).is_err());
    }

    #[test]
    fn distributivity_merges_terms() {
        let d1 = planar(2, &[(1, 1)]);
        let d2 = planar(2, &[(1, 1), (2, 2)]);
        let d3 = planar(2, &[(1, 1)]);
        let lhs = &(Elt::basis(d1.clone()) + Elt::basis(d2.clone())) * &Elt::basis(d3.clone());
        // d1 d3 = d2 d3 = {(1,1)}, so the two terms merge into coefficient 2
        assert_eq!(lhs, Elt::term(planar(2, &[(1, 1)]), rational_int(2)));
        let termwise = Elt::basis(d1.compose(&d3).unwrap()) + Elt::basis(d2.compose(&d3).unwrap());
        assert_eq!(lhs, termwise);
    }

    #[test]
    fn small_matrix_units() {
        assert_eq!(matrix_unit::<Rational>(&PlanarRookDiagram::empty(3)), Elt::basis(PlanarRookDiagram::empty(3)));
        let one = planar(3, &[(2, 1)]);
        assert_eq!(matrix_unit::<Rational>(&one), Elt::basis(one) - Elt::basis(PlanarRookDiagram::empty(3)));
        let d = planar(5, &[(2, 1), (4, 2)]);
        let expected = Elt::basis(d.clone()) - Elt::basis(planar(5, &[(2, 1)])) - Elt::basis(planar(5, &[(4, 2)]))
            + Elt::basis(PlanarRookDiagram::empty(5));
        assert_eq!(matrix_unit::<Rational>(&d), expected);
    }

    #[test]
    fn matrix_unit_rule_small() {
        for n in 0..=2 {
            assert!(verify_matrix_unit_rule(n).passed());
        }
        let r = verify_matrix_unit_rule(2);
        assert_eq!(r.checks_run, 36);
    }

    #[test]
    fn matrix_unit_square_and_mismatch() {
        // β(d) = {1,3} ≠ τ(d) = {2,3}: X_d X_d = 0
        let d = planar(3, &[(1, 2), (3, 3)]);
        assert!((&matrix_unit::<Rational>(&d) * &matrix_unit(&d)).is_zero());
        // idempotent case β = τ
        let e = planar(3, &[(1, 1), (3, 3)]);
        assert_eq!(&matrix_unit::<Rational>(&e) * &matrix_unit(&e), matrix_unit(&e));
        // transport: β(d) = τ(d2) = {1,3}, giving X of the diagram from β(d2) to τ(d)
        let d2 = planar(3, &[(2, 1), (3, 3)]);
        let prod = &matrix_unit::<Rational>(&d) * &matrix_unit(&d2);
        assert_eq!(prod, matrix_unit(&planar(3, &[(2, 2), (3, 3)])));
    }

    #[test]
    fn module_matrices() {
        assert_eq!(module_action_matrix::<i64>(&PlanarRookDiagram::identity(4), 2), SparseMatrix::identity(6));
        for d in enumerate_planar(3, None) {
            assert_eq!(module_action_matrix::<i64>(&d, 0), SparseMatrix::identity(1));
        }
        let d = planar(5, &[(1, 2), (2, 3), (5, 4)]);
        let m = module_action_matrix::<i64>(&d, 2);
        let basis = Subset::all_of_size(5, 2);
        let col = subset_index(&basis, &Subset::new(5, [2, 5]).unwrap());
        let row = subset_index(&basis, &Subset::new(5, [3, 4]).unwrap());
        assert_eq!(m.column(col), SparseVector::unit(10, row));
        let dead = subset_index(&basis, &Subset::new(5, [4, 5]).unwrap());
        assert!(m.column(dead).is_zero());
    }

    #[test]
    fn matrix_units_act_as_matrix_units() {
        // X_d sends m_{β(d)} to m_{τ(d)} and kills every other m_s of that size
        for d in enumerate_planar(3, None) {
            let l = d.edge_count();
            let m = matrix_unit::<Rational>(&d).module_matrix(l);
            let basis = Subset::all_of_size(3, l);
            let expected = SparseMatrix::from_triplets(
                basis.len(),
                basis.len(),
                [(subset_index(&basis, &d.tops()), subset_index(&basis, &d.bottoms()), rational_int(1))],
            );
            assert_eq!(m, expected, "d = {d}");
        }
    }

    #[test]
    fn burnside_small() {
        let r = verify_irreducibility(3, 1);
        assert!(r.passed());
        assert_eq!(r.notes["span_dimension"], json!(9));
        assert!(verify_irreducibility(4, 0).passed());
        assert_eq!(verify_irreducibility(4, 2).notes["span_dimension"], json!(36));
    }

    #[test]
    fn semisimple_small() {
        let r = verify_semisimplicity(3);
        assert!(r.passed());
        assert_eq!(r.notes["joint_rank"], json!(20));
        assert!(verify_semisimplicity(0).passed());
    }

    #[test]
    fn mobius_and_multiplicativity_small() {
        assert!(verify_mobius_inversion(3).passed());
        assert!(verify_module_multiplicativity(3).passed());
    }

    #[test]
    fn json_round_trip() {
        let x = Elt::term(planar(3, &[(1, 2)]), Rational::new(1.into(), 2.into())) - Elt::one(3);
        let v = x.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"n":3,"terms":[{"diagram":{"n":3,"edges":[[1,2]]},"coeff":"1/2"},{"diagram":{"n":3,"edges":[[1,1],[2,2],[3,3]]},"coeff":"-1/1"}]}"#
        );
        assert_eq!(Elt::from_json(&v).unwrap(), x);
        let bare: Value = serde_json::from_str(r#"{"n":3,"edges":[[1,1]]}"#).unwrap();
        assert_eq!(Elt::from_json(&bare).unwrap(), Elt::basis(planar(3, &[(1, 1)])));
    }
}
