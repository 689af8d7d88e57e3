//! Double description method over the integers.
//!
//! Computes the extreme rays of a pointed polyhedral cone `{y : <a_k, y> >= 0}`
//! given by its constraint rows. Constraints are processed in input order: the
//! first `n` linearly independent rows seed the initial simplicial cone, and
//! every later row splits the current ray set. New rays are formed only from
//! adjacent pairs (combinatorial test on zero sets), so the ray set stays
//! minimal after every step.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{self, to_rational_rows};
use crate::point::{dot, primitive};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum DdError {
    /// The constraint rows do not have full column rank, so the cone contains a line.
    RankDeficient,
}

#[derive(Clone)]
struct Ray {
    vec: Vec<BigInt>,
    /// zero[k] is true when the ray is tight on processed row k.
    zero: Vec<bool>,
}

/// Extreme rays of `{y in R^n : <row, y> >= 0 for every row}`, primitive and
/// sorted lexicographically.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], n: usize) -> Result<Vec<Vec<BigInt>>, DdError> {
    let m = rows.len();
    let (basis, rest) = split_basis(rows, n)?;

    let basis_rows: Vec<Vec<BigInt>> = basis.iter().map(|&k| rows[k].clone()).collect();
    let inv = linalg::inverse(&to_rational_rows(&basis_rows)).ok_or(DdError::RankDeficient)?;

    let mut rays: Vec<Ray> = (0..n)
        .map(|j| {
            let column: Vec<_> = inv.iter().map(|row| row[j].clone()).collect();
            let lcm = column.iter().fold(BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
            let scaled: Vec<BigInt> = column
                .iter()
                .map(|c| (c * num_rational::BigRational::from_integer(lcm.clone())).to_integer())
                .collect();
            let mut zero = vec![false; m];
            for (i, &k) in basis.iter().enumerate() {
                zero[k] = i != j;
            }
            Ray { vec: primitive(&scaled), zero }
        })
        .collect();

    let mut processed: Vec<usize> = basis.clone();
    for k in rest {
        let a = &rows[k];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.vec)).collect();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut zer = Vec::new();
        for (i, v) in values.iter().enumerate() {
            if v.is_positive() {
                pos.push(i);
            } else if v.is_negative() {
                neg.push(i);
            } else {
                zer.push(i);
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(pos.len() + zer.len());
        if !neg.is_empty() {
            for &p in &pos {
                for &q in &neg {
                    if !adjacent(&rays, p, q, &processed, n) {
                        continue;
                    }
                    let combo: Vec<BigInt> = rays[q]
                        .vec
                        .iter()
                        .zip(&rays[p].vec)
                        .map(|(yq, yp)| &values[p] * yq - &values[q] * yp)
                        .collect();
                    let zero: Vec<bool> = rays[p]
                        .zero
                        .iter()
                        .zip(&rays[q].zero)
                        .enumerate()
                        .map(|(idx, (&zp, &zq))| idx == k || (zp && zq))
                        .collect();
                    next.push(Ray { vec: primitive(&combo), zero });
                }
            }
        }
        for &i in pos.iter() {
            next.push(rays[i].clone());
        }
        for &i in zer.iter() {
            let mut r = rays[i].clone();
            r.zero[k] = true;
            next.push(r);
        }
        rays = next;
        processed.push(k);
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.vec).filter(|v| !v.iter().all(Zero::is_zero)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Picks the first `n` linearly independent rows (in input order) as the
/// initial basis; returns (basis indices, remaining indices in input order).
fn split_basis(rows: &[Vec<BigInt>], n: usize) -> Result<(Vec<usize>, Vec<usize>), DdError> {
    let mut basis = Vec::with_capacity(n);
    let mut rest = Vec::new();
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    for (k, row) in rows.iter().enumerate() {
        if basis.len() < n {
            chosen.push(row.clone());
            if linalg::rank_int(&chosen) == chosen.len() {
                basis.push(k);
                continue;
            }
            chosen.pop();
        }
        rest.push(k);
    }
    if basis.len() < n {
        return Err(DdError::RankDeficient);
    }
    Ok((basis, rest))
}

fn adjacent(rays: &[Ray], p: usize, q: usize, processed: &[usize], n: usize) -> bool {
    let common: Vec<usize> = processed.iter().copied().filter(|&k| rays[p].zero[k] && rays[q].zero[k]).collect();
    if common.len() + 2 < n {
        return false;
    }
    !rays.iter().enumerate().any(|(i, r)| i != p && i != q && common.iter().all(|&k| r.zero[k]))
}
