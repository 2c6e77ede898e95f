//! Rook diagrams: partial injections on `{1..n}` drawn as two rows of `n`
//! vertices, with edges running from a bottom vertex to a top vertex.
//!
//! Composition stacks diagrams vertically. `a.compose(&b)` places `b` below
//! `a`, so as maps it is `a ∘ b`: `b` acts first. Vertices are 1-based.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing subset of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SubsetRepr", into = "SubsetRepr")]
pub struct Subset {
    n: usize,
    members: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SubsetRepr {
    n: usize,
    members: Vec<usize>,
}

impl TryFrom<SubsetRepr> for Subset {
    type Error = Error;

    fn try_from(r: SubsetRepr) -> Result<Self> {
        Subset::new(r.n, r.members)
    }
}

impl From<Subset> for SubsetRepr {
    fn from(s: Subset) -> Self {
        SubsetRepr { n: s.n, members: s.members }
    }
}

impl Subset {
    /// Accepts members in any order; rejects duplicates and out-of-range labels.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!("repeated member in {members:?}")));
        }
        if let Some(&bad) = members.iter().find(|&&m| m == 0 || m > n) {
            return Err(Error::InvalidSubset(format!("member {bad} outside 1..={n}")));
        }
        Ok(Self { n, members })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, members: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self { n, members: (1..=n).collect() }
    }

    /// Subset of `{1..n}` from a bitmask, bit `i` standing for `i + 1`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self {
            n,
            members: (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().map(|m| 1u64 << (m - 1)).sum()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: usize) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.members.iter().all(|m| other.contains(*m))
    }

    /// All `ℓ`-element subsets of `{1..n}` in lexicographic order.
    pub fn all_of_size(n: usize, size: usize) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(size);
        fn rec(n: usize, size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Subset>) {
            if current.len() == size {
                out.push(Subset { n, members: current.clone() });
                return;
            }
            let remaining = size - current.len();
            for m in start..=n + 1 - remaining {
                current.push(m);
                rec(n, size, m + 1, current, out);
                current.pop();
            }
        }
        if size <= n {
            rec(n, size, 1, &mut current, &mut out);
        }
        out
    }

    /// All subsets of `{1..n}`, by size and then lexicographically.
    pub fn all(n: usize) -> Vec<Subset> {
        (0..=n).flat_map(|l| Subset::all_of_size(n, l)).collect()
    }
}

/// Size first, then lexicographic.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.members.len(), &self.members).cmp(&(other.n, other.members.len(), &other.members))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// An edge from a bottom vertex to a top vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub bottom: usize,
    pub top: usize,
}

/// A partial injection on `{1..n}`, i.e. a 0/1 matrix with at most one 1 in
/// each row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct RookDiagram {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<DiagramRepr> for RookDiagram {
    type Error = Error;

    fn try_from(r: DiagramRepr) -> Result<Self> {
        RookDiagram::new(r.n, r.edges.into_iter().map(|[b, t]| (b, t)))
    }
}

impl From<RookDiagram> for DiagramRepr {
    fn from(d: RookDiagram) -> Self {
        DiagramRepr { n: d.n, edges: d.edges.iter().map(|e| [e.bottom, e.top]).collect() }
    }
}

impl RookDiagram {
    /// Builds a diagram from `(bottom, top)` pairs in any order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(bottom, top)| Edge { bottom, top }).collect();
        for e in &edges {
            if e.bottom == 0 || e.bottom > n || e.top == 0 || e.top > n {
                return Err(Error::InvalidDiagram(format!(
                    "edge ({}, {}) has a vertex outside 1..={n}",
                    e.bottom, e.top
                )));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0].bottom == w[1].bottom) {
            return Err(Error::InvalidDiagram(format!("bottom vertex {} used twice", w[0].bottom)));
        }
        let mut tops: Vec<usize> = edges.iter().map(|e| e.top).collect();
        tops.sort_unstable();
        if let Some(w) = tops.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidDiagram(format!("top vertex {} used twice", w[0])));
        }
        Ok(Self { n, edges })
    }

    pub fn identity(n: usize) -> Self {
        Self { n, edges: (1..=n).map(|i| Edge { bottom: i, top: i }).collect() }
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted by bottom vertex.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Image of a bottom vertex, if it carries an edge.
    pub fn apply(&self, bottom: usize) -> Option<usize> {
        self.edges
            .binary_search_by_key(&bottom, |e| e.bottom)
            .ok()
            .map(|i| self.edges[i].top)
    }

    /// Bottom endpoints β(d).
    pub fn bottoms(&self) -> Subset {
        Subset { n: self.n, members: self.edges.iter().map(|e| e.bottom).collect() }
    }

    /// Top endpoints τ(d).
    pub fn tops(&self) -> Subset {
        let mut members: Vec<usize> = self.edges.iter().map(|e| e.top).collect();
        members.sort_unstable();
        Subset { n: self.n, members }
    }

    /// No two edges cross: tops increase along the bottom order.
    pub fn is_planar(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].top < w[1].top)
    }

    /// `self ∘ other`: `other` is stacked below `self` and acts first.
    pub fn compose(&self, other: &RookDiagram) -> Result<RookDiagram> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let edges = other
            .edges
            .iter()
            .filter_map(|e| self.apply(e.top).map(|top| Edge { bottom: e.bottom, top }))
            .collect();
        Ok(RookDiagram { n: self.n, edges })
    }

    pub fn into_planar(self) -> Result<PlanarRookDiagram> {
        PlanarRookDiagram::try_from(self)
    }

    /// The 0/1 matrix of the diagram: entry `(top, bottom)` is 1 for each edge,
    /// so composition is matrix multiplication.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for e in &self.edges {
            m[e.top - 1][e.bottom - 1] = 1;
        }
        m
    }
}

impl fmt::Display for RookDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}:", self.n)?;
        for e in &self.edges {
            write!(f, " {}->{}", e.bottom, e.top)?;
        }
        f.write_str("]")
    }
}

/// A rook diagram without crossings: an order-preserving partial bijection.
///
/// Ordered by edge count, then bottom set, then top set (each lexicographic),
/// which is also the enumeration order of [`enumerate_planar`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RookDiagram", into = "RookDiagram")]
pub struct PlanarRookDiagram(RookDiagram);

impl TryFrom<RookDiagram> for PlanarRookDiagram {
    type Error = Error;

    fn try_from(d: RookDiagram) -> Result<Self> {
        if d.is_planar() {
            Ok(Self(d))
        } else {
            Err(Error::InvalidDiagram(format!("{d} has crossing edges")))
        }
    }
}

impl From<PlanarRookDiagram> for RookDiagram {
    fn from(d: PlanarRookDiagram) -> Self {
        d.0
    }
}

impl std::ops::Deref for PlanarRookDiagram {
    type Target = RookDiagram;

    fn deref(&self) -> &RookDiagram {
        &self.0
    }
}

impl PlanarRookDiagram {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        RookDiagram::new(n, edges)?.into_planar()
    }

    pub fn identity(n: usize) -> Self {
        Self(RookDiagram::identity(n))
    }

    pub fn empty(n: usize) -> Self {
        Self(RookDiagram::empty(n))
    }

    /// The unique planar diagram with bottom set `bottom` and top set `top`:
    /// the i-th smallest bottom vertex joins the i-th smallest top vertex.
    pub fn canonical(bottom: &Subset, top: &Subset) -> Result<Self> {
        if bottom.n != top.n {
            return Err(Error::SizeMismatch { left: bottom.n, right: top.n });
        }
        if bottom.len() != top.len() {
            return Err(Error::CardinalityMismatch { bottom: bottom.len(), top: top.len() });
        }
        let edges = bottom
            .members
            .iter()
            .zip(&top.members)
            .map(|(&b, &t)| Edge { bottom: b, top: t })
            .collect();
        Ok(Self(RookDiagram { n: bottom.n, edges }))
    }

    pub fn as_rook(&self) -> &RookDiagram {
        &self.0
    }

    pub fn compose(&self, other: &PlanarRookDiagram) -> Result<PlanarRookDiagram> {
        self.0.compose(&other.0).map(Self)
    }

    /// The module action on subsets: `d(s)` when `s ⊆ β(d)`, otherwise `None`
    /// (the zero vector).
    pub fn apply_to_subset(&self, s: &Subset) -> Result<Option<Subset>> {
        if s.n != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: s.n });
        }
        let mut image = Vec::with_capacity(s.len());
        for &m in &s.members {
            match self.apply(m) {
                Some(t) => image.push(t),
                None => return Ok(None),
            }
        }
        // order-preserving, so the image is already sorted
        Ok(Some(Subset { n: s.n, members: image }))
    }

    /// Every diagram obtained by deleting edges, paired with the number of
    /// deleted edges. Ordered by bitmask over the edge list.
    pub fn subdiagrams(&self) -> Vec<(PlanarRookDiagram, usize)> {
        let m = self.edge_count();
        assert!(m < 64, "too many edges to enumerate subdiagrams");
        (0..1u64 << m)
            .map(|mask| {
                let edges: Vec<Edge> = self
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, e)| *e)
                    .collect();
                let deleted = m - edges.len();
                (Self(RookDiagram { n: self.n(), edges }), deleted)
            })
            .collect()
    }

    fn order_key(&self) -> (usize, usize, Vec<usize>, Vec<usize>) {
        (self.n(), self.edge_count(), self.bottoms().members, self.tops().members)
    }
}

impl Ord for PlanarRookDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for PlanarRookDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlanarRookDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All planar diagrams on `n` vertices, optionally restricted to exactly
/// `edge_count` edges, ordered by edge count, bottom set, top set.
pub fn enumerate_planar(n: usize, edge_count: Option<usize>) -> Vec<PlanarRookDiagram> {
    let counts: Vec<usize> = match edge_count {
        Some(l) if l > n => Vec::new(),
        Some(l) => vec![l],
        None => (0..=n).collect(),
    };
    let mut out = Vec::new();
    for l in counts {
        let subsets = Subset::all_of_size(n, l);
        for b in &subsets {
            for t in &subsets {
                out.push(PlanarRookDiagram::canonical(b, t).expect("equal sizes"));
            }
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rook(n: usize, edges: &[(usize, usize)]) -> RookDiagram {
        RookDiagram::new(n, edges.iter().copied()).unwrap()
    }

    fn set(n: usize, m: &[usize]) -> Subset {
        Subset::new(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn construction() {
        let d1 = rook(5, &[(1, 2), (2, 5), (5, 3)]);
        assert!(!d1.is_planar());
        assert!(RookDiagram::empty(5).is_planar());
        assert!(matches!(RookDiagram::new(3, [(1, 2), (2, 2)]), Err(Error::InvalidDiagram(_))));
        assert!(matches!(RookDiagram::new(3, [(1, 2), (1, 3)]), Err(Error::InvalidDiagram(_))));
        assert!(RookDiagram::new(3, [(4, 1)]).is_err());
    }

    #[test]
    fn matrix_picture() {
        // matching 0/1 matrix: rows are top vertices, columns bottom vertices
        let d1 = rook(5, &[(1, 2), (2, 5), (5, 3)]);
        let m = d1.to_matrix();
        assert_eq!(m[1][0], 1);
        assert_eq!(m[4][1], 1);
        assert_eq!(m[2][4], 1);
        assert_eq!(m.iter().flatten().filter(|x| **x == 1).count(), 3);
    }

    #[test]
    fn worked_product() {
        let d1 = rook(5, &[(1, 2), (2, 5), (5, 3)]);
        let d2 = rook(5, &[(2, 1), (4, 2)]);
        assert_eq!(d1.compose(&d2).unwrap(), rook(5, &[(2, 2), (4, 5)]));
    }

    #[test]
    fn compose_units_and_zero() {
        let d = rook(4, &[(1, 3), (3, 1), (4, 4)]);
        assert_eq!(RookDiagram::identity(4).compose(&d).unwrap(), d);
        assert_eq!(d.compose(&RookDiagram::identity(4)).unwrap(), d);
        assert_eq!(d.compose(&RookDiagram::empty(4)).unwrap(), RookDiagram::empty(4));
        assert!(matches!(d.compose(&RookDiagram::empty(3)), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn compose_is_matrix_product() {
        let a = rook(4, &[(1, 3), (3, 1), (4, 4)]);
        let b = rook(4, &[(2, 1), (1, 4), (3, 3)]);
        let ab = a.compose(&b).unwrap().to_matrix();
        let (ma, mb) = (a.to_matrix(), b.to_matrix());
        for i in 0..4 {
            for j in 0..4 {
                let s: u8 = (0..4).map(|l| ma[i][l] * mb[l][j]).sum();
                assert_eq!(ab[i][j], s);
            }
        }
    }

    #[test]
    fn planarity() {
        assert!(rook(5, &[(1, 2), (2, 3), (5, 4)]).is_planar());
        let d = rook(5, &[(1, 2), (2, 3), (5, 4)]);
        assert_eq!(d.bottoms(), set(5, &[1, 2, 5]));
        assert_eq!(d.tops(), set(5, &[2, 3, 4]));
    }

    #[test]
    fn canonical_diagrams() {
        let d = PlanarRookDiagram::canonical(&set(5, &[1, 2, 5]), &set(5, &[2, 3, 4])).unwrap();
        assert_eq!(d.as_rook(), &rook(5, &[(1, 2), (2, 3), (5, 4)]));
        assert_eq!(
            PlanarRookDiagram::canonical(&Subset::empty(4), &Subset::empty(4)).unwrap(),
            PlanarRookDiagram::empty(4)
        );
        let d = PlanarRookDiagram::canonical(&set(3, &[1, 3]), &set(3, &[2, 3])).unwrap();
        assert_eq!(d.as_rook(), &rook(3, &[(1, 2), (3, 3)]));
        assert!(matches!(
            PlanarRookDiagram::canonical(&set(3, &[1]), &set(3, &[2, 3])),
            Err(Error::CardinalityMismatch { bottom: 1, top: 2 })
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_planar(3, Some(1)).len(), 9);
        assert_eq!(enumerate_planar(3, None).len(), 20);
        let zero = enumerate_planar(0, None);
        assert_eq!(zero, vec![PlanarRookDiagram::empty(0)]);
        assert!(enumerate_planar(2, Some(3)).is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_planar(4, None);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn subset_action() {
        let d = PlanarRookDiagram::canonical(&set(5, &[1, 2, 5]), &set(5, &[2, 3, 4])).unwrap();
        assert_eq!(d.apply_to_subset(&set(5, &[2, 5])).unwrap(), Some(set(5, &[3, 4])));
        assert_eq!(d.apply_to_subset(&set(5, &[4, 5])).unwrap(), None);
        assert_eq!(d.apply_to_subset(&Subset::empty(5)).unwrap(), Some(Subset::empty(5)));
        assert!(d.apply_to_subset(&Subset::empty(4)).is_err());
    }

    #[test]
    fn subdiagram_listing() {
        let d = PlanarRookDiagram::new(5, [(2, 1), (4, 2)]).unwrap();
        let subs = d.subdiagrams();
        let mut deleted: Vec<usize> = subs.iter().map(|(_, k)| *k).collect();
        deleted.sort_unstable();
        assert_eq!(deleted, vec![0, 1, 1, 2]);
        assert!(subs.contains(&(PlanarRookDiagram::new(5, [(2, 1)]).unwrap(), 1)));
        assert_eq!(PlanarRookDiagram::empty(3).subdiagrams(), vec![(PlanarRookDiagram::empty(3), 0)]);
    }

    #[test]
    fn subsets() {
        assert_eq!(Subset::all_of_size(4, 2).len(), 6);
        assert_eq!(Subset::all(4).len(), 16);
        assert_eq!(Subset::all(0), vec![Subset::empty(0)]);
        let s = set(5, &[2, 5]);
        assert_eq!(Subset::from_mask(5, s.mask()), s);
        assert!(Subset::new(3, [1, 1]).is_err());
        assert!(Subset::new(3, [0]).is_err());
        assert!(set(3, &[3]) > set(3, &[1]));
        assert!(set(3, &[1, 2]) > set(3, &[3]));
    }

    #[test]
    fn json_formats() {
        let d = rook(5, &[(5, 3), (1, 2), (2, 5)]);
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"n":5,"edges":[[1,2],[2,5],[5,3]]}"#);
        let back: RookDiagram = serde_json::from_str(r#"{"n":5,"edges":[[1,2],[2,5],[5,3]]}"#).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<PlanarRookDiagram>(r#"{"n":5,"edges":[[1,2],[2,5],[5,3]]}"#).is_err());
        assert!(serde_json::from_str::<RookDiagram>(r#"{"n":3,"edges":[[1,2],[2,2]]}"#).is_err());
        let s = set(5, &[5, 2]);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"n":5,"members":[2,5]}"#);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }
}
