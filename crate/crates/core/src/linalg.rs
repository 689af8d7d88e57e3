//! Exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Matrix = Vec<Vec<BigRational>>;

pub(crate) fn to_rational_rows(rows: &[Vec<BigInt>]) -> Matrix {
    rows.iter().map(|r| r.iter().cloned().map(BigRational::from_integer).collect()).collect()
}

/// Reduces `m` in place to row echelon form and returns the pivot columns.
fn echelon(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in &mut m[row][col..ncols] {
            *x = &*x * &inv;
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let factor = r[col].clone();
                for (x, p) in r[col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub(crate) fn rank(rows: &Matrix) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut m = rows.clone();
    echelon(&mut m, ncols).len()
}

pub(crate) fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    rank(&to_rational_rows(rows))
}

/// Solves `A x = b` for `A` with full column rank. Returns `None` when the
/// system is inconsistent or the solution is not unique.
pub(crate) fn solve_unique(a: &Matrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.first()?.len();
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug, n + 1);
    if pivots.contains(&n) || pivots.len() != n {
        return None;
    }
    Some((0..n).map(|i| aug[i][n].clone()).collect())
}

/// Inverse of a square matrix, or `None` if singular.
pub(crate) fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let pivots = echelon(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
    }

    #[test]
    fn rank_of_collinear_rows() {
        assert_eq!(rank(&m(&[&[1, 1], &[2, 2]])), 1);
        assert_eq!(rank(&m(&[&[4, 2, 0], &[2, 1, 4]])), 2);
        assert_eq!(rank(&m(&[&[0, 0]])), 0);
    }

    #[test]
    fn overdetermined_solve() {
        let a = m(&[&[2, -1], &[-1, 2], &[1, 1]]);
        let one = BigRational::one();
        let x = solve_unique(&a, &[one.clone(), one.clone(), BigRational::from_integer(2.into())]).unwrap();
        assert_eq!(x, vec![one.clone(), one.clone()]);
        assert!(solve_unique(&a, &[one.clone(), one.clone(), one]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], BigRational::new(2.into(), 3.into()));
        assert_eq!(inv[0][1], BigRational::new((-1).into(), 3.into()));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }
}
