//! Exact Gaussian elimination over a [`Field`].
//!
//! Rows are kept sparse and bucketed by leading column. For each column the
//! pivot is the candidate row whose leading entry has the smallest
//! [`Field::pivot_weight`] (ties broken by row length), which keeps rational
//! coefficient growth small on the structured matrices this crate produces.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::sparse::{SparseMatrix, SparseVector};

type Row<F> = Vec<(usize, F)>;

/// `row - factor * pivot`, both sorted by column.
fn axpy<F: Field>(row: &Row<F>, factor: &F, pivot: &Row<F>) -> Row<F> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(factor.clone() * pivot[j].1.clone())));
            j += 1;
        } else {
            let v = row[i].1.clone() - factor.clone() * pivot[j].1.clone();
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form: returns pivot rows with strictly distinct leading columns,
/// ordered by leading column.
fn echelon<F: Field>(rows: impl IntoIterator<Item = Row<F>>) -> Vec<Row<F>> {
    let mut buckets: BTreeMap<usize, Vec<Row<F>>> = BTreeMap::new();
    for row in rows {
        if let Some(&(lead, _)) = row.first() {
            buckets.entry(lead).or_default().push(row);
        }
    }
    let mut pivots = Vec::new();
    while let Some((col, mut candidates)) = buckets.pop_first() {
        let best = candidates
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| (r[0].1.pivot_weight(), r.len()))
            .map(|(i, _)| i)
            .expect("buckets are never empty");
        let pivot = candidates.swap_remove(best);
        let lead_inv = pivot[0].1.inv();
        for row in candidates {
            let factor = row[0].1.clone() * lead_inv.clone();
            let reduced = axpy(&row, &factor, &pivot);
            debug_assert!(reduced.first().is_none_or(|e| e.0 > col));
            if let Some(&(lead, _)) = reduced.first() {
                buckets.entry(lead).or_default().push(reduced);
            }
        }
        pivots.push(pivot);
    }
    pivots
}

fn matrix_rows<F: Field>(m: &SparseMatrix<F>) -> Vec<Row<F>> {
    m.clone()
        .into_rows()
        .into_iter()
        .map(|r| r.into_iter().collect())
        .collect()
}

pub fn rank<F: Field>(m: &SparseMatrix<F>) -> usize {
    echelon(matrix_rows(m)).len()
}

/// `cols - rank`: the dimension of `{x : m x = 0}`.
pub fn nullspace_dimension<F: Field>(m: &SparseMatrix<F>) -> usize {
    m.cols() - rank(m)
}

/// Dimension of the span of a family of vectors.
pub fn span_dimension<F: Field>(vectors: &[SparseVector<F>]) -> usize {
    echelon(
        vectors
            .iter()
            .map(|v| v.entries().map(|(i, x)| (i, x.clone())).collect::<Row<F>>()),
    )
    .len()
}

/// Exact inverse by Gauss-Jordan elimination on `[m | I]`.
pub fn invert<F: Field>(m: &SparseMatrix<F>) -> Result<SparseMatrix<F>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let augmented = matrix_rows(m).into_iter().enumerate().map(|(i, mut row)| {
        row.push((n + i, F::one()));
        row
    });
    let mut pivots = echelon(augmented);
    if pivots.len() < n || pivots.iter().any(|r| r[0].0 >= n) {
        return Err(Error::SingularMatrix);
    }
    // pivots[i] now leads at column i
    for i in (0..n).rev() {
        let lead_inv = pivots[i][0].1.inv();
        let normalized: Row<F> = pivots[i]
            .iter()
            .map(|(c, x)| (*c, x.clone() * lead_inv.clone()))
            .collect();
        pivots[i] = normalized;
        for j in 0..i {
            let factor = pivots[j]
                .iter()
                .find(|(c, _)| *c == i)
                .map(|(_, x)| x.clone());
            if let Some(factor) = factor {
                pivots[j] = axpy(&pivots[j], &factor, &pivots[i]);
            }
        }
    }
    let mut inv = SparseMatrix::zero(n, n);
    for (r, row) in pivots.into_iter().enumerate() {
        for (c, x) in row {
            if c >= n {
                inv.add_at(r, c - n, x);
            }
        }
    }
    Ok(inv)
}

/// Dimension of the centralizer `{X : X A = A X for every A in generators}`
/// of a family of `n x n` matrices, computed as the nullspace of the stacked
/// linear constraints on the `n^2` entries of `X` (variable `X[a][b]` has
/// index `a * n + b`).
pub fn commutant_dimension<F: Field>(generators: &[SparseMatrix<F>]) -> usize {
    let Some(first) = generators.first() else {
        return 0;
    };
    let n = first.rows();
    let mut constraints: Vec<Row<F>> = Vec::new();
    for g in generators {
        assert!(g.is_square() && g.rows() == n, "generators must share a square shape");
        let gt = g.transpose();
        // (XG - GX)[i][j] = Σ_l X[i][l] G[l][j] - Σ_l G[i][l] X[l][j]
        for i in 0..n {
            for j in 0..n {
                let mut row: BTreeMap<usize, F> = BTreeMap::new();
                for (l, x) in gt.row(j) {
                    accumulate(&mut row, i * n + l, x.clone());
                }
                for (l, x) in g.row(i) {
                    accumulate(&mut row, l * n + j, -x.clone());
                }
                if !row.is_empty() {
                    constraints.push(row.into_iter().collect());
                }
            }
        }
    }
    n * n - echelon(constraints).len()
}

fn accumulate<F: Field>(row: &mut BTreeMap<usize, F>, col: usize, x: F) {
    match row.remove(&col) {
        Some(old) => {
            let s = old + x;
            if !s.is_zero() {
                row.insert(col, s);
            }
        }
        None => {
            if !x.is_zero() {
                row.insert(col, x);
            }
        }
    }
}
