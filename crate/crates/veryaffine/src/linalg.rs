//! Exact dense linear algebra over any field in this crate.
//!
//! Plain Gaussian elimination with first nonzero pivoting and no row
//! scaling, so the determinant falls out as the signed product of pivots.
//! Matrices here are tiny (transversality checks on 4 by 4 systems), which
//! keeps the cubic algorithm entirely adequate.

use alloc::vec::Vec;

use crate::field::Field;

/// Unique solution of a square system together with the determinant.
#[derive(Clone, Debug, PartialEq)]
pub struct Solved<E> {
    pub solution: Vec<E>,
    pub det: E,
}

/// The coefficient matrix was singular.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SingularMatrix;

impl core::fmt::Display for SingularMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "matrix is singular")
    }
}

fn check_square<F: Field>(a: &[Vec<F::Elem>]) -> usize {
    let n = a.len();
    for row in a {
        assert_eq!(row.len(), n, "matrix is not square");
    }
    n
}

/// Forward elimination on `rows`; returns the determinant.
///
/// Each row may carry extra augmented columns past the first `n`.
fn eliminate<F: Field>(field: &F, rows: &mut [Vec<F::Elem>], n: usize) -> F::Elem {
    let mut det = field.one();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !field.is_zero(&rows[r][col]));
        let Some(pivot_row) = pivot_row else {
            return field.zero();
        };
        if pivot_row != col {
            rows.swap(pivot_row, col);
            det = field.neg(&det);
        }
        let pivot = rows[col][col].clone();
        det = field.mul(&det, &pivot);
        for r in col + 1..n {
            if field.is_zero(&rows[r][col]) {
                continue;
            }
            let factor = field.div(&rows[r][col], &pivot);
            let (upper, lower) = rows.split_at_mut(r);
            let src = &upper[col];
            let dst = &mut lower[0];
            for c in col..src.len() {
                dst[c] = field.sub(&dst[c], &field.mul(&factor, &src[c]));
            }
        }
    }
    det
}

/// Determinant of a square matrix.
pub fn determinant<F: Field>(field: &F, a: &[Vec<F::Elem>]) -> F::Elem {
    let n = check_square::<F>(a);
    let mut rows = a.to_vec();
    eliminate(field, &mut rows, n)
}

/// Solves `a * x = b` when the solution is unique.
pub fn solve_unique<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[F::Elem],
) -> Result<Solved<F::Elem>, SingularMatrix> {
    let n = check_square::<F>(a);
    assert_eq!(b.len(), n, "right hand side length mismatch");
    let mut rows: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let det = eliminate(field, &mut rows, n);
    if field.is_zero(&det) {
        return Err(SingularMatrix);
    }
    let mut solution = alloc::vec![field.zero(); n];
    for row in (0..n).rev() {
        let mut acc = rows[row][n].clone();
        for col in row + 1..n {
            acc = field.sub(&acc, &field.mul(&rows[row][col], &solution[col]));
        }
        solution[row] = field.div(&acc, &rows[row][row]);
    }
    Ok(Solved { solution, det })
}
