//! Sparse vectors and matrices over a [`Ring`].

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector<R> {
    dim: usize,
    entries: BTreeMap<usize, R>,
}

impl<R: Ring> SparseVector<R> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: BTreeMap::new() }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zero(dim);
        v.add_at(index, R::one());
        v
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, R)>) -> Self {
        let mut v = Self::zero(dim);
        for (i, c) in entries {
            v.add_at(i, c);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, index: usize) -> R {
        self.entries.get(&index).cloned().unwrap_or_else(R::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &R)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds `c` at `index`, dropping the entry if it cancels.
    ///
    /// Panics if `index` is out of range.
    pub fn add_at(&mut self, index: usize, c: R) {
        assert!(index < self.dim, "index {index} out of range for dimension {}", self.dim);
        if c.is_zero() {
            return;
        }
        match self.entries.remove(&index) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.entries.insert(index, s);
                }
            }
            None => {
                self.entries.insert(index, c);
            }
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_entries(self.dim, self.entries.iter().map(|(i, x)| (*i, c.clone() * x.clone())))
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> SparseVector<S> {
        SparseVector::from_entries(self.dim, self.entries.iter().map(|(i, c)| (*i, f(c))))
    }

    pub fn try_map<S: Ring>(&self, mut f: impl FnMut(&R) -> Result<S>) -> Result<SparseVector<S>> {
        let mut out = SparseVector::zero(self.dim);
        for (i, c) in &self.entries {
            out.add_at(*i, f(c)?);
        }
        Ok(out)
    }
}

impl<R: Ring> Add for SparseVector<R> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "vector dimension mismatch");
        for (i, c) in rhs.entries {
            self.add_at(i, c);
        }
        self
    }
}

impl<R: Ring> Neg for SparseVector<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.into_iter().map(|(i, c)| (i, -c)).collect(),
        }
    }
}

impl<R: Ring> Sub for SparseVector<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// Row-major sparse matrix. Each row is an ordered map from column to a
/// nonzero entry.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, R>>,
}

impl<R: Ring> SparseMatrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.add_at(i, i, c.clone());
        }
        m
    }

    pub fn diagonal(diag: impl IntoIterator<Item = R>) -> Self {
        let diag: Vec<R> = diag.into_iter().collect();
        let mut m = Self::zero(diag.len(), diag.len());
        for (i, c) in diag.into_iter().enumerate() {
            m.add_at(i, i, c);
        }
        m
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let mut m = Self::zero(rows, cols);
        for (r, c, x) in entries {
            m.add_at(r, c, x);
        }
        m
    }

    /// Dense constructor, mostly for tests.
    pub fn from_rows(rows: &[Vec<R>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, x) in row.iter().enumerate() {
                m.add_at(r, c, x.clone());
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVector<R>]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.dim(), rows, "column {c} has wrong dimension");
            for (r, x) in v.entries() {
                m.add_at(r, c, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> R {
        self.data[row].get(&col).cloned().unwrap_or_else(R::zero)
    }

    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, &R)> + '_ {
        self.data[row].iter().map(|(c, x)| (*c, x))
    }

    /// All nonzero entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &R)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, *c, x)))
    }

    pub fn add_at(&mut self, row: usize, col: usize, c: R) {
        assert!(row < self.rows && col < self.cols, "entry ({row},{col}) out of range");
        if c.is_zero() {
            return;
        }
        let slot = &mut self.data[row];
        match slot.remove(&col) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    slot.insert(col, s);
                }
            }
            None => {
                slot.insert(col, c);
            }
        }
    }

    pub fn column(&self, col: usize) -> SparseVector<R> {
        SparseVector::from_entries(
            self.rows,
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| row.get(&col).map(|x| (r, x.clone()))),
        )
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for (r, c, x) in self.triplets() {
            t.data[c].insert(r, x.clone());
        }
        t
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_triplets(self.rows, self.cols, self.triplets().map(|(r, k, x)| (r, k, c.clone() * x.clone())))
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> SparseMatrix<S> {
        SparseMatrix::from_triplets(self.rows, self.cols, self.triplets().map(|(r, c, x)| (r, c, f(x))).collect::<Vec<_>>())
    }

    pub fn try_map<S: Ring>(&self, mut f: impl FnMut(&R) -> Result<S>) -> Result<SparseMatrix<S>> {
        let mut out = SparseMatrix::zero(self.rows, self.cols);
        for (r, c, x) in self.triplets() {
            out.add_at(r, c, f(x)?);
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &SparseVector<R>) -> SparseVector<R> {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        let mut out = SparseVector::zero(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = R::zero();
            for (c, x) in row {
                let y = v.get(*c);
                if !y.is_zero() {
                    acc = acc + x.clone() * y;
                }
            }
            out.add_at(r, acc);
        }
        out
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::SizeMismatch { left: self.cols, right: rhs.rows });
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for (r, row) in self.data.iter().enumerate() {
            let target = &mut out.data[r];
            for (k, x) in row {
                for (c, y) in &rhs.data[*k] {
                    let term = x.clone() * y.clone();
                    match target.remove(c) {
                        Some(old) => {
                            let s = old + term;
                            if !s.is_zero() {
                                target.insert(*c, s);
                            }
                        }
                        None => {
                            if !term.is_zero() {
                                target.insert(*c, term);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        (self * other) - (other * self)
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        (self * other) + (other * self)
    }

    /// Kronecker product with `self` as the left tensor factor. The left
    /// factor occupies the low-order part of the combined index:
    /// `(i_a, i_b) ↦ i_a + rows(a) * i_b`.
    pub fn kron(&self, right: &Self) -> Self {
        let mut out = Self::zero(self.rows * right.rows, self.cols * right.cols);
        for (rb, cb, xb) in right.triplets() {
            for (ra, ca, xa) in self.triplets() {
                out.add_at(ra + self.rows * rb, ca + self.cols * cb, xa.clone() * xb.clone());
            }
        }
        out
    }

    /// Flattens the matrix into a row-major coordinate vector.
    pub fn flatten(&self) -> SparseVector<R> {
        SparseVector::from_entries(
            self.rows * self.cols,
            self.triplets().map(|(r, c, x)| (r * self.cols + c, x.clone())),
        )
    }

    /// Stacks row vectors into a matrix.
    pub fn from_row_vectors(cols: usize, rows: &[SparseVector<R>]) -> Self {
        let mut m = Self::zero(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            assert_eq!(v.dim(), cols);
            for (c, x) in v.entries() {
                m.data[r].insert(c, x.clone());
            }
        }
        m
    }

    pub(crate) fn into_rows(self) -> Vec<BTreeMap<usize, R>> {
        self.data
    }
}

impl<R: Ring> Add for SparseMatrix<R> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        for (r, row) in rhs.data.into_iter().enumerate() {
            for (c, x) in row {
                self.add_at(r, c, x);
            }
        }
        self
    }
}

impl<R: Ring> Sub for SparseMatrix<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for SparseMatrix<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .into_iter()
                .map(|row| row.into_iter().map(|(c, x)| (c, -x)).collect())
                .collect(),
        }
    }
}

impl<R: Ring> Mul for &SparseMatrix<R> {
    type Output = SparseMatrix<R>;

    /// Panics on a shape mismatch; use [`SparseMatrix::checked_mul`] to get an error instead.
    fn mul(self, rhs: Self) -> SparseMatrix<R> {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl<R: Ring> Mul for SparseMatrix<R> {
    type Output = SparseMatrix<R>;

    fn mul(self, rhs: Self) -> SparseMatrix<R> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SparseMatrix<i64> {
        SparseMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn no_stored_zeros() {
        let mut a = SparseMatrix::<i64>::zero(2, 2);
        a.add_at(0, 1, 3);
        a.add_at(0, 1, -3);
        assert_eq!(a.nnz(), 0);
        assert_eq!(a, SparseMatrix::zero(2, 2));
    }

    #[test]
    fn product_and_commutator() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(&a * &b, m(&[&[1, 0], &[0, 0]]));
        assert_eq!(a.anticommutator(&b), SparseMatrix::identity(2));
        assert_eq!(a.commutator(&b), m(&[&[1, 0], &[0, -1]]));
        assert!(a.checked_mul(&m(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn kron_index_convention() {
        // left factor in the low position
        let a = m(&[&[0, 1], &[0, 0]]);
        let id = SparseMatrix::<i64>::identity(2);
        let k = a.kron(&id);
        // basis index = a_idx + 2 * b_idx; a maps index 1 -> 0 in the left slot
        assert_eq!(k.get(0, 1), 1);
        assert_eq!(k.get(2, 3), 1);
        assert_eq!(k.nnz(), 2);
    }

    #[test]
    fn columns_and_flatten() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.column(1), SparseVector::from_entries(2, [(0, 2), (1, 4)]));
        assert_eq!(a.flatten(), SparseVector::from_entries(4, [(0, 1), (1, 2), (2, 3), (3, 4)]));
        assert_eq!(a.transpose().get(0, 1), 3);
        let v = SparseVector::from_entries(2, [(0, 1), (1, -1)]);
        assert_eq!(a.mul_vec(&v), SparseVector::from_entries(2, [(0, -1), (1, -1)]));
    }
}
