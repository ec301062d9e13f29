//! Exact Gaussian elimination.

use super::field::Scalar;
use super::linmap::{LinMap, Vector};
use crate::error::{Error, Result};

/// Reduced row echelon form of a row-major matrix, in place. Returns pivot columns.
fn rref(rows: &mut [Vector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &(y * &factor);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn row_major(a: &LinMap) -> Vec<Vector> {
    (0..a.cod_dim()).map(|r| a.row(r)).collect()
}

pub fn rank(a: &LinMap) -> usize {
    let mut rows = row_major(a);
    rref(&mut rows, a.dom_dim()).len()
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
pub fn solve_linear(a: &LinMap, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(b.len(), a.cod_dim(), "right-hand side length");
    let n = a.dom_dim();
    let mut rows: Vec<Vector> = (0..a.cod_dim())
        .map(|r| {
            let mut row = a.row(r);
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![a.field().zero(); n];
    for (row, &c) in rows.iter().zip(&pivots) {
        x[c] = row[n].clone();
    }
    Some(x)
}

/// A basis of the kernel, one vector per free column of the echelon form.
pub fn kernel_basis(a: &LinMap) -> Vec<Vector> {
    let n = a.dom_dim();
    let field = a.field();
    let mut rows = row_major(a);
    let pivots = rref(&mut rows, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); n];
            v[free] = field.one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect()
}

pub fn invert(a: &LinMap) -> Result<LinMap> {
    let n = a.cod_dim();
    if a.dom_dim() != n {
        return Err(Error::DimensionMismatch {
            context: "invert (square matrix required)".into(),
            expected: n,
            actual: a.dom_dim(),
        });
    }
    let field = a.field();
    let mut rows: Vec<Vector> = (0..n)
        .map(|r| {
            let mut row = a.row(r);
            row.extend((0..n).map(|c| if c == r { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if pivots.len() < n {
        return Err(Error::SingularMatrix);
    }
    Ok(LinMap::from_fn(field, n, n, |r, c| rows[r][n + c].clone()))
}

/// Whether every column of `vectors` lies in the span of `basis`.
pub fn spans_contain(
    basis: &[Vector],
    vectors: &[Vector],
    dim: usize,
    field: super::Field,
) -> bool {
    let b = LinMap::from_columns(field, dim, basis.to_vec());
    let r = rank(&b);
    let mut all = basis.to_vec();
    all.extend(vectors.iter().cloned());
    rank(&LinMap::from_columns(field, dim, all)) == r
}
