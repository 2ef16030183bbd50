//! Randomized comparison of folded ranks against exact ranks.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::exact::{exact_rank, DEFAULT_EXACT_GUARD};
use super::fold::{FoldConfig, FoldedMatrix, SparseRow};
use crate::error::Result;
use crate::scalar::Modulus;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldTrialSummary {
    pub trials: usize,
    /// Trials where the folded rank exceeded the exact rank.
    pub exceeded: usize,
    /// Trials where the folded rank equalled the exact rank.
    pub equal: usize,
}

impl FoldTrialSummary {
    pub fn equal_fraction(&self) -> f64 {
        self.equal as f64 / self.trials.max(1) as f64
    }
}

/// A random integer matrix of at most `max_rows × max_cols` with a planted
/// rank, built as a product of two random factors.
pub fn random_low_rank_matrix(rng: &mut ChaCha8Rng, max_rows: usize, max_cols: usize) -> Vec<Vec<i64>> {
    let rows = rng.random_range(1..=max_rows);
    let cols = rng.random_range(1..=max_cols);
    let inner = rng.random_range(0..=rows.min(cols));
    let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..inner).map(|_| rng.random_range(-4..=4)).collect()).collect();
    let b: Vec<Vec<i64>> = (0..inner).map(|_| (0..cols).map(|_| rng.random_range(-4..=4)).collect()).collect();
    (0..rows).map(|i| (0..cols).map(|j| (0..inner).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Folds a dense integer matrix into `n` rows.
pub fn fold_dense(matrix: &[Vec<i64>], n: usize, prime: u64, seed: u64) -> Result<FoldedMatrix> {
    let cols = matrix.first().map_or(0, Vec::len);
    let m = Modulus::new(prime).expect("odd prime");
    let mut folded = FoldedMatrix::new(FoldConfig { n_rows_folded: n, n_cols_logical: cols, prime, rng_seed: seed })?;
    let rows: Vec<(u64, SparseRow)> = matrix
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let entries = r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(j, v)| (j, m.reduce_i64(*v))).collect();
            (i as u64, entries)
        })
        .collect();
    folded.ingest_batch(&rows)?;
    Ok(folded)
}

/// Runs `trials` random matrices of at most 40×60, each folded to a square
/// whose size is drawn between its exact rank and its smaller dimension.
pub fn fold_soundness_trials(trials: usize, prime: u64, seed: u64) -> Result<FoldTrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = FoldTrialSummary { trials, exceeded: 0, equal: 0 };
    for t in 0..trials {
        let matrix = random_low_rank_matrix(&mut rng, 40, 60);
        let big: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let r = exact_rank(&big, DEFAULT_EXACT_GUARD)?;
        let n = rng.random_range(r.max(1)..=matrix.len().min(matrix[0].len()).max(r.max(1)));
        let folded = fold_dense(&matrix, n, prime, seed.wrapping_add(t as u64))?.into_rank();
        if folded > r {
            summary.exceeded += 1;
        } else if folded == r {
            summary.equal += 1;
        }
    }
    Ok(summary)
}
