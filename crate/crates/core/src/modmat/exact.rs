//! Exact linear algebra for the oracles: fraction-free Bareiss rank over the
//! integers, and reduced row echelon forms over any [`Coeff`] field.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::LinComb;
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Maximum number of matrix cells accepted by [`exact_rank`].
pub const DEFAULT_EXACT_GUARD: usize = 4_000_000;

/// Rank over Q of an integer matrix by fraction-free elimination.
pub fn exact_rank(matrix: &[Vec<BigInt>], guard: usize) -> Result<usize> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::InvariantViolation("ragged matrix".into()));
    }
    let size = rows.saturating_mul(cols);
    if size > guard {
        return Err(Error::GuardExceeded { what: "exact rank", size, limit: guard });
    }
    let mut m = matrix.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(pivot, rank);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &prow[c] * &row[j] - &f * &prow[j];
                row[j] = v.div_floor(&prev);
            }
            row[c] = BigInt::zero();
        }
        prev = top[rank][c].clone();
        rank += 1;
    }
    Ok(rank)
}

/// Scales a rational row by the lcm of its denominators.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// Dense rows of `polys` in the coordinates given by `index`.
///
/// Fails if a polynomial has a term outside the index.
pub fn dense_rows<K, C>(polys: &[LinComb<K, C>], index: &BTreeMap<K, usize>, ctx: &C::Ctx) -> Result<Vec<Vec<C>>>
where
    K: Ord + Copy + std::fmt::Display,
    C: Coeff,
{
    polys
        .iter()
        .map(|p| {
            let mut row = vec![C::zero_in(ctx); index.len()];
            for (k, c) in p.terms() {
                let j = *index.get(k).ok_or_else(|| Error::UnexpectedWord(k.to_string()))?;
                row[j] = c.clone();
            }
            Ok(row)
        })
        .collect()
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref<C: Coeff>(mut rows: Vec<Vec<C>>) -> (Vec<Vec<C>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(p, r);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank<C: Coeff>(rows: Vec<Vec<C>>) -> usize {
    rref(rows).1.len()
}

/// Basis of `{x : M x = 0}` for the `rows × cols` matrix `M`.
pub fn kernel<C: Coeff>(rows: Vec<Vec<C>>, cols: usize, ctx: &C::Ctx) -> Vec<Vec<C>> {
    let (reduced, pivots) = rref(rows);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![C::zero_in(ctx); cols];
            v[f] = C::one_in(ctx);
            for (row, &pc) in reduced.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Whether two families of vectors of the same length span the same space.
pub fn same_span<C: Coeff>(a: Vec<Vec<C>>, b: Vec<Vec<C>>) -> bool {
    let ra = rank(a.clone());
    let rb = rank(b.clone());
    if ra != rb {
        return false;
    }
    let mut both = a;
    both.extend(b);
    rank(both) == ra
}
