//! The Lie superalgebra `gl(1|1)` acting on `V^{⊗k}`, `V = span{x, y}` with
//! `x` even and `y` odd.
//!
//! Odd generators act on a simple tensor factor by factor with the Koszul
//! sign `(-1)^{#y factors to the left}`; even generators act as derivations.
//! The highest weight vectors `v_s = e(y ⊗ u_s)` and their partners `f v_s`
//! form a basis, and planar rook diagrams on `k - 1` vertices act on it by
//! `v_s ↦ v_{ds}`, `f v_s ↦ f v_{ds}`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::Bounds;
use crate::diagram::{binomial, enumerate_planar, PlanarRookDiagram, Subset};
use crate::error::{Error, Result};
use crate::linalg::{self, invert, rank, span_dimension};
use crate::report::ClaimReport;
use crate::scalar::{from_int, sign, Field, JsonScalar, Ring};
use crate::sparse::{SparseMatrix, SparseVector};
use crate::tensor::{basis_word, y_before, y_tensor_u, TensorVector, MAX_TENSOR_POWER};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    E,
    F,
    H1,
    H2,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::E, Generator::F, Generator::H1, Generator::H2];

    pub fn is_odd(self) -> bool {
        matches!(self, Generator::E | Generator::F)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::E => "e",
            Generator::F => "f",
            Generator::H1 => "h1",
            Generator::H2 => "h2",
        })
    }
}

/// Highest weight `[m, n]`: the `(h1, h2)` eigenvalues of a highest weight vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightLabel {
    pub m: i64,
    pub n: i64,
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L[{},{}]", self.m, self.n)
    }
}

/// The `2^k x 2^k` matrix of a generator on `V^{⊗k}`.
pub fn generator_matrix<R: Ring>(g: Generator, k: usize) -> SparseMatrix<R> {
    assert!(k <= MAX_TENSOR_POWER, "tensor power {k} too large");
    let dim = 1usize << k;
    let mut m = SparseMatrix::zero(dim, dim);
    for mask in 0..dim {
        match g {
            Generator::E | Generator::F => {
                for i in 0..k {
                    let is_y = mask >> i & 1 == 1;
                    // e: y -> x, f: x -> y
                    if is_y == (g == Generator::E) {
                        m.add_at(mask ^ (1 << i), mask, sign(y_before(mask, i)));
                    }
                }
            }
            Generator::H1 => m.add_at(mask, mask, from_int(i64::from(k as u32 - mask.count_ones()))),
            Generator::H2 => m.add_at(mask, mask, from_int(i64::from(mask.count_ones()))),
        }
    }
    m
}

/// The tensor power `V^{⊗k}` with its generator matrices cached.
#[derive(Clone, Debug)]
pub struct Gl11Tensor<R> {
    k: usize,
    e: SparseMatrix<R>,
    f: SparseMatrix<R>,
    h1: SparseMatrix<R>,
    h2: SparseMatrix<R>,
}

impl<R: Ring> Gl11Tensor<R> {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "tensor power must be at least 1");
        Self {
            k,
            e: generator_matrix(Generator::E, k),
            f: generator_matrix(Generator::F, k),
            h1: generator_matrix(Generator::H1, k),
            h2: generator_matrix(Generator::H2, k),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        1 << self.k
    }

    pub fn generator(&self, g: Generator) -> &SparseMatrix<R> {
        match g {
            Generator::E => &self.e,
            Generator::F => &self.f,
            Generator::H1 => &self.h1,
            Generator::H2 => &self.h2,
        }
    }

    pub fn apply(&self, g: Generator, v: &TensorVector<R>) -> TensorVector<R> {
        TensorVector::from_coords(self.k, self.generator(g).mul_vec(v.coords()))
    }

    /// Subsets of `{1..k-1}` in basis order: by size, then lexicographic.
    pub fn subsets(&self) -> Vec<Subset> {
        Subset::all(self.k - 1)
    }

    /// `v_s = e(y ⊗ u_s)`.
    pub fn highest_weight_vector(&self, s: &Subset) -> Result<TensorVector<R>> {
        self.check_subset(s)?;
        Ok(TensorVector::from_coords(
            self.k,
            self.e.mul_vec(&SparseVector::unit(self.dim(), y_tensor_u(s, self.k))),
        ))
    }

    /// `f v_s`.
    pub fn lowered_vector(&self, s: &Subset) -> Result<TensorVector<R>> {
        let v = self.highest_weight_vector(s)?;
        Ok(self.apply(Generator::F, &v))
    }

    fn check_subset(&self, s: &Subset) -> Result<()> {
        if s.n() + 1 != self.k {
            return Err(Error::SizeMismatch { left: self.k - 1, right: s.n() });
        }
        Ok(())
    }

    /// Columns `v_s` for all `s`, then `f v_s` in the same order.
    pub fn tensor_basis_matrix(&self) -> SparseMatrix<R> {
        let subsets = self.subsets();
        let mut cols: Vec<SparseVector<R>> = Vec::with_capacity(self.dim());
        let hw: Vec<TensorVector<R>> = subsets
            .iter()
            .map(|s| self.highest_weight_vector(s).expect("subset sized for k"))
            .collect();
        cols.extend(hw.iter().map(|v| v.coords().clone()));
        cols.extend(hw.iter().map(|v| self.apply(Generator::F, v).into_coords()));
        SparseMatrix::from_columns(self.dim(), &cols)
    }

    /// The action of `d` on the `{v_s, f v_s}` basis as a 0/1 matrix.
    pub fn diagram_action_in_hw_basis(&self, d: &PlanarRookDiagram) -> Result<SparseMatrix<R>> {
        diagram_action_in_pair_basis(d, self.k)
    }
}

/// Shared by the classical and quantum modules: `d` sends basis column
/// `v_s` to `v_{ds}` and `f v_s` to `f v_{ds}`, or to zero when `s ⊄ β(d)`.
pub(crate) fn diagram_action_in_pair_basis<R: Ring>(d: &PlanarRookDiagram, k: usize) -> Result<SparseMatrix<R>> {
    if d.n() + 1 != k {
        return Err(Error::SizeMismatch { left: k - 1, right: d.n() });
    }
    let subsets = Subset::all(k - 1);
    let half = subsets.len();
    let mut m = SparseMatrix::zero(2 * half, 2 * half);
    for (col, s) in subsets.iter().enumerate() {
        if let Some(image) = d.apply_to_subset(s)? {
            let row = subsets.binary_search(&image).expect("image is a subset");
            m.add_at(row, col, R::one());
            m.add_at(half + row, half + col, R::one());
        }
    }
    Ok(m)
}

impl<F: Field> Gl11Tensor<F> {
    /// The basis change `B` (columns `v_s`, then `f v_s`) and its inverse.
    pub fn basis_change(&self) -> Result<(SparseMatrix<F>, SparseMatrix<F>)> {
        let b = self.tensor_basis_matrix();
        let inv = invert(&b)?;
        Ok((b, inv))
    }

    /// Matrix of `d ∈ P_{k-1}` in standard tensor coordinates: `B D B^{-1}`.
    pub fn diagram_action_matrix(&self, d: &PlanarRookDiagram) -> Result<SparseMatrix<F>> {
        let (b, inv) = self.basis_change()?;
        self.diagram_action_with(d, &b, &inv)
    }

    /// As [`Self::diagram_action_matrix`] with a precomputed basis change.
    pub fn diagram_action_with(
        &self,
        d: &PlanarRookDiagram,
        b: &SparseMatrix<F>,
        inv: &SparseMatrix<F>,
    ) -> Result<SparseMatrix<F>> {
        let dv = self.diagram_action_in_hw_basis(d)?;
        Ok(&(b * &dv) * inv)
    }
}

/// Direct-sum multiplicities: `L[ℓ+1, k-1-ℓ]` appears once per `ℓ`-subset of
/// `{1..k-1}`. Counted from the subsets themselves.
pub fn decomposition_table(k: usize) -> Vec<(WeightLabel, u64)> {
    assert!(k >= 1, "tensor power must be at least 1");
    let mut counts = vec![0u64; k];
    for s in Subset::all(k - 1) {
        counts[s.len()] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .map(|(l, c)| (WeightLabel { m: l as i64 + 1, n: (k - 1 - l) as i64 }, c))
        .collect()
}

fn vector_json<R: Ring + JsonScalar>(v: &TensorVector<R>) -> Value {
    v.to_json()
}

/// Superalgebra relations as matrix identities on `V^{⊗k}`:
/// `ef + fe = k·id`, `[h1,e] = e`, `[h2,e] = -e`, `[h1,f] = -f`, `[h2,f] = f`,
/// `e² = f² = 0`.
pub fn verify_superalgebra_relations(k: usize) -> ClaimReport {
    let t = Gl11Tensor::<Rational>::new(k);
    let id_k = SparseMatrix::scalar(t.dim(), from_int::<Rational>(k as i64));
    let (e, f, h1, h2) = (&t.e, &t.f, &t.h1, &t.h2);
    let zero = SparseMatrix::zero(t.dim(), t.dim());
    let relations: [(&str, SparseMatrix<Rational>, SparseMatrix<Rational>); 7] = [
        ("ef+fe=k", e.anticommutator(f), id_k),
        ("[h1,e]=e", h1.commutator(e), e.clone()),
        ("[h2,e]=-e", h2.commutator(e), -e.clone()),
        ("[h1,f]=-f", h1.commutator(f), -f.clone()),
        ("[h2,f]=f", h2.commutator(f), f.clone()),
        ("e^2=0", e * e, zero.clone()),
        ("f^2=0", f * f, zero),
    ];
    let mut report = ClaimReport::new("superalgebra-relations").param("k", k);
    for (name, lhs, rhs) in relations {
        report.check(lhs == rhs, || json!({ "relation": name }));
    }
    report
}

/// For every `s`: `e v_s = 0`, `f f v_s = 0`, `e f v_s = k v_s`,
/// `h1 v_s = (|s|+1) v_s`, `h2 v_s = (k-1-|s|) v_s`, `h1 f v_s = |s| f v_s`,
/// `h2 f v_s = (k-|s|) f v_s`.
pub fn verify_highest_weight_pairs(k: usize) -> ClaimReport {
    let t = Gl11Tensor::<Rational>::new(k);
    let subsets = t.subsets();
    let mut report = ClaimReport::new("highest-weight-pairs").param("k", k);
    report.check_all(&subsets, |s| {
        let v = t.highest_weight_vector(s).expect("sized");
        let fv = t.apply(Generator::F, &v);
        let size = s.len() as i64;
        let k = k as i64;
        let scaled = |w: &TensorVector<Rational>, c: i64| w.scale(&from_int(c));
        let checks: [(&str, bool); 8] = [
            ("v_s != 0", !v.is_zero()),
            ("e v_s = 0", t.apply(Generator::E, &v).is_zero()),
            ("f f v_s = 0", t.apply(Generator::F, &fv).is_zero()),
            ("e f v_s = k v_s", t.apply(Generator::E, &fv) == scaled(&v, k)),
            ("h1 v_s = (|s|+1) v_s", t.apply(Generator::H1, &v) == scaled(&v, size + 1)),
            ("h2 v_s = (k-1-|s|) v_s", t.apply(Generator::H2, &v) == scaled(&v, k - 1 - size)),
            ("h1 f v_s = |s| f v_s", t.apply(Generator::H1, &fv) == scaled(&fv, size)),
            ("h2 f v_s = (k-|s|) f v_s", t.apply(Generator::H2, &fv) == scaled(&fv, k - size)),
        ];
        checks.iter().find(|(_, ok)| !ok).map(|(name, _)| {
            json!({
                "equation": name,
                "subset": serde_json::to_value(s).unwrap(),
                "v_s": vector_json(&v),
            })
        })
    });
    report
}

/// The `2^k` vectors `{v_s, f v_s}` are linearly independent.
pub fn verify_direct_sum(k: usize) -> ClaimReport {
    let t = Gl11Tensor::<Rational>::new(k);
    let r = rank(&t.tensor_basis_matrix());
    let mut report = ClaimReport::new("direct-sum").param("k", k);
    report.note("rank", r);
    report.check(r == t.dim(), || json!({ "rank": r, "dimension": t.dim() }));
    report
}

/// Multiplicity table against the binomial prediction and the dimension count.
pub fn verify_decomposition(k: usize) -> ClaimReport {
    let table = decomposition_table(k);
    let mut report = ClaimReport::new("decomposition").param("k", k);
    for (l, (label, mult)) in table.iter().enumerate() {
        let expected = binomial(k as u64 - 1, l as u64);
        report.check(*mult == expected, || json!({ "label": label.to_string(), "multiplicity": mult, "expected": expected }));
    }
    let total: u64 = table.iter().map(|(_, m)| 2 * m).sum();
    report.check(total == 1 << k, || json!({ "total_dimension": total }));
    report
}

/// Planar diagrams checked by [`verify_commuting_actions`]: all of `P_{k-1}`
/// up to `k = 5`, a seeded sample of 500 beyond.
pub fn commuting_action_diagrams(k: usize, seed: u64) -> Vec<PlanarRookDiagram> {
    let mut all = enumerate_planar(k - 1, None);
    if k > 5 && all.len() > 500 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        all.shuffle(&mut rng);
        all.truncate(500);
        all.sort();
    }
    all
}

/// Every diagram matrix commutes with every generator matrix.
pub fn verify_commuting_actions(k: usize, seed: u64) -> ClaimReport {
    let t = Gl11Tensor::<Rational>::new(k);
    let diagrams = commuting_action_diagrams(k, seed);
    let (b, inv) = t.basis_change().expect("pair basis is invertible");
    let mut report = ClaimReport::new("commuting-actions")
        .param("k", k)
        .param("diagrams", diagrams.len());
    report.check_all(&diagrams, |d| {
        let m = t.diagram_action_with(d, &b, &inv).expect("sized");
        Generator::ALL.iter().find_map(|g| {
            (!m.commutator(t.generator(*g)).is_zero())
                .then(|| json!({ "diagram": serde_json::to_value(d).unwrap(), "generator": g }))
        })
    });
    report
}

/// The matrices of the `C(2(k-1), k-1)` planar diagrams are linearly independent.
pub fn verify_faithful_action(k: usize) -> ClaimReport {
    let t = Gl11Tensor::<Rational>::new(k);
    let (b, inv) = t.basis_change().expect("pair basis is invertible");
    let diagrams = enumerate_planar(k - 1, None);
    let rows: Vec<SparseVector<Rational>> = diagrams
        .iter()
        .map(|d| t.diagram_action_with(d, &b, &inv).expect("sized").flatten())
        .collect();
    let r = span_dimension(&rows);
    let expected = binomial(2 * (k as u64 - 1), k as u64 - 1) as usize;
    let mut report = ClaimReport::new("faithful-action").param("k", k);
    report.note("rank", r);
    report.check(r == expected && diagrams.len() == expected, || json!({ "rank": r, "expected": expected }));
    report
}

/// `dim End_{gl(1|1)}(V^{⊗k})`, the joint centralizer of `e, f, h1, h2`.
/// Refuses `k` beyond the configured commutant bound.
pub fn commutant_dimension(k: usize) -> Result<usize> {
    commutant_dimension_bounded(k, Bounds::from_env().commutant_k)
}

pub fn commutant_dimension_bounded(k: usize, bound: usize) -> Result<usize> {
    if k > bound {
        return Err(Error::BoundExceeded { what: "k (commutant solve)", value: k, bound });
    }
    let t = Gl11Tensor::<Rational>::new(k);
    Ok(linalg::commutant_dimension(&[t.e, t.f, t.h1, t.h2]))
}

/// The commutant dimension agrees with `C(2(k-1), k-1)`.
pub fn verify_centralizer(k: usize, bound: usize) -> ClaimReport {
    let expected = binomial(2 * (k as u64 - 1), k as u64 - 1) as usize;
    let mut report = ClaimReport::new("centralizer-dimension").param("k", k);
    match commutant_dimension_bounded(k, bound) {
        Ok(dim) => {
            report.note("dimension", dim);
            report.check(dim == expected, || json!({ "dimension": dim, "expected": expected }));
        }
        Err(e) => report.fail_with(json!({ "error": e.to_string() })),
    }
    report
}

/// Human-readable expansion of a tensor vector, e.g. `x⊗y - y⊗x`.
pub fn format_tensor(v: &TensorVector<Rational>) -> String {
    use num_traits::{One, Signed};
    let mut out = String::new();
    for (mask, c) in v.terms().collect::<Vec<_>>().into_iter().rev() {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&crate::scalar::format_rational(&mag));
            out.push(' ');
        }
        out.push_str(&basis_word(v.k(), mask));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: usize) -> Gl11Tensor<Rational> {
        Gl11Tensor::new(k)
    }

    fn simple(word: &str) -> TensorVector<Rational> {
        TensorVector::simple(&word.chars().map(|c| c == 'y').collect::<Vec<_>>())
    }

    #[test]
    fn single_factor_action() {
        let t = t(1);
        assert_eq!(t.apply(Generator::E, &simple("y")), simple("x"));
        assert!(t.apply(Generator::E, &simple("x")).is_zero());
        assert_eq!(t.apply(Generator::F, &simple("x")), simple("y"));
        assert!(t.apply(Generator::F, &simple("y")).is_zero());
    }

    #[test]
    fn graded_sign_on_two_factors() {
        let t = t(2);
        assert_eq!(t.apply(Generator::E, &simple("yy")), simple("xy").sub(&simple("yx")));
    }

    #[test]
    fn weights_sum_to_k() {
        for k in 1..=6 {
            let t = t(k);
            let sum = t.generator(Generator::H1).clone() + t.generator(Generator::H2).clone();
            assert_eq!(sum, SparseMatrix::scalar(t.dim(), from_int(k as i64)));
        }
    }

    #[test]
    fn worked_highest_weight_vector() {
        let t = t(4);
        let v = t.highest_weight_vector(&Subset::new(3, [1, 3]).unwrap()).unwrap();
        assert_eq!(v, simple("xxyx").sub(&simple("yxxx")));
        assert_eq!(format_tensor(&v), "x⊗x⊗y⊗x - y⊗x⊗x⊗x");
        assert_eq!(t.apply(Generator::H1, &v), v.scale(&from_int(3)));
        assert_eq!(t.apply(Generator::H2, &v), v);
    }

    #[test]
    fn degenerate_vectors() {
        assert_eq!(t(1).highest_weight_vector(&Subset::empty(0)).unwrap(), simple("x"));
        assert_eq!(t(2).highest_weight_vector(&Subset::empty(1)).unwrap(), simple("xy").sub(&simple("yx")));
        assert!(t(3).highest_weight_vector(&Subset::empty(1)).is_err());
    }

    #[test]
    fn generator_matrices_match_kronecker_recursion() {
        // e_{A⊗V} = e_A ⊗ 1 + P_A ⊗ e_V with P the parity operator
        fn parity(k: usize) -> SparseMatrix<i64> {
            SparseMatrix::diagonal((0..1usize << k).map(|m| if m.count_ones() % 2 == 0 { 1 } else { -1 }))
        }
        let e1 = SparseMatrix::from_rows(&[vec![0i64, 1], vec![0, 0]]);
        let f1 = e1.transpose();
        let mut e = e1.clone();
        let mut f = f1.clone();
        for k in 2..=6 {
            e = e.kron(&SparseMatrix::identity(2)) + parity(k - 1).kron(&e1);
            f = f.kron(&SparseMatrix::identity(2)) + parity(k - 1).kron(&f1);
            assert_eq!(e, generator_matrix(Generator::E, k), "e at k={k}");
            assert_eq!(f, generator_matrix(Generator::F, k), "f at k={k}");
        }
    }

    #[test]
    fn relations_and_pairs_small() {
        for k in 1..=5 {
            assert!(verify_superalgebra_relations(k).passed(), "relations k={k}");
            assert!(verify_highest_weight_pairs(k).passed(), "pairs k={k}");
            assert!(verify_direct_sum(k).passed(), "direct sum k={k}");
        }
        assert_eq!(verify_highest_weight_pairs(5).checks_run, 16);
        assert_eq!(verify_direct_sum(3).notes["rank"], json!(8));
    }

    #[test]
    fn lone_factor_pair() {
        let t = t(1);
        let v = t.highest_weight_vector(&Subset::empty(0)).unwrap();
        let lowered = t.lowered_vector(&Subset::empty(0)).unwrap();
        assert_eq!(lowered, simple("y"));
        assert_eq!(t.apply(Generator::E, &lowered), v);
        let b = t.tensor_basis_matrix();
        assert_eq!(b, SparseMatrix::identity(2));
    }

    #[test]
    fn decomposition_tables() {
        let row = |m: i64, n: i64, c: u64| (WeightLabel { m, n }, c);
        assert_eq!(decomposition_table(4), vec![row(1, 3, 1), row(2, 2, 3), row(3, 1, 3), row(4, 0, 1)]);
        assert_eq!(decomposition_table(2), vec![row(1, 1, 1), row(2, 0, 1)]);
        assert_eq!(decomposition_table(1), vec![row(1, 0, 1)]);
        for k in 1..=8 {
            assert!(verify_decomposition(k).passed());
        }
    }

    #[test]
    fn diagram_actions() {
        let t = t(4);
        assert_eq!(t.diagram_action_matrix(&PlanarRookDiagram::identity(3)).unwrap(), SparseMatrix::identity(16));
        // the empty diagram projects onto V_∅
        let p = t.diagram_action_matrix(&PlanarRookDiagram::empty(3)).unwrap();
        let v0 = t.highest_weight_vector(&Subset::empty(3)).unwrap();
        let fv0 = t.apply(Generator::F, &v0);
        assert_eq!(p.mul_vec(v0.coords()), *v0.coords());
        assert_eq!(p.mul_vec(fv0.coords()), *fv0.coords());
        let s = Subset::new(3, [2]).unwrap();
        assert!(p.mul_vec(t.highest_weight_vector(&s).unwrap().coords()).is_zero());
        assert_eq!(&p * &p, p);
        assert!(t.diagram_action_matrix(&PlanarRookDiagram::empty(2)).is_err());
    }

    #[test]
    fn diagram_action_on_hw_vectors() {
        let t = t(4);
        let d = PlanarRookDiagram::new(3, [(1, 2), (3, 3)]).unwrap();
        let m = t.diagram_action_matrix(&d).unwrap();
        let s = Subset::new(3, [1, 3]).unwrap();
        let ds = Subset::new(3, [2, 3]).unwrap();
        let v = t.highest_weight_vector(&s).unwrap();
        assert_eq!(m.mul_vec(v.coords()), *t.highest_weight_vector(&ds).unwrap().coords());
    }

    #[test]
    fn commuting_and_faithful_small() {
        assert!(verify_commuting_actions(1, 0).passed());
        let r = verify_commuting_actions(3, 0);
        assert!(r.passed());
        assert_eq!(r.checks_run, 6);
        assert_eq!(verify_faithful_action(3).notes["rank"], json!(6));
        assert_eq!(verify_faithful_action(1).notes["rank"], json!(1));
    }

    #[test]
    fn commutant_small() {
        assert_eq!(commutant_dimension_bounded(1, 5).unwrap(), 1);
        assert_eq!(commutant_dimension_bounded(3, 5).unwrap(), 6);
        assert!(matches!(commutant_dimension_bounded(6, 5), Err(Error::BoundExceeded { .. })));
    }
}
