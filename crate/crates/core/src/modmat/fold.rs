use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Modulus;

/// Sparse row over F_p: `(logical column, residue)` pairs.
pub type SparseRow = Vec<(usize, u32)>;

const ROW_STREAM: u64 = 0x726f77;
const COL_STREAM: u64 = 0x636f6c;

/// Work below this many cells per pivot step is done on the calling thread.
const PAR_THRESHOLD: usize = 1 << 15;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldConfig {
    pub n_rows_folded: usize,
    pub n_cols_logical: usize,
    pub prime: u64,
    pub rng_seed: u64,
}

/// Dense `n × min(n, cols)` accumulator of randomly folded rows.
///
/// Logical row `i` lands in physical row `i mod n`, logical column `j` in
/// physical column `j mod width`. The first block of rows and columns is
/// copied with multiplier 1; every later one is added with a nonzero
/// multiplier drawn from a counter-based generator keyed by the seed and
/// the index, so the contents do not depend on arrival order.
#[derive(Clone, Debug)]
pub struct FoldedMatrix {
    cfg: FoldConfig,
    modulus: Modulus,
    width: usize,
    data: Vec<u32>,
    col_mult: Vec<u32>,
    rows_ingested: u64,
}

fn multiplier(seed: u64, stream: u64, index: u64, m: Modulus) -> u32 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(index as u128 * 16);
    rng.random_range(1..m.get()) as u32
}

impl FoldedMatrix {
    pub fn new(cfg: FoldConfig) -> Result<Self> {
        let modulus = Modulus::new(cfg.prime)
            .filter(|_| crate::arith::is_prime(cfg.prime))
            .ok_or_else(|| Error::InvalidPrime { p: cfg.prime, reason: "not an odd prime below 2^32".into() })?;
        let n = cfg.n_rows_folded;
        let width = n.min(cfg.n_cols_logical);
        let col_mult = (0..cfg.n_cols_logical)
            .map(|j| if j < width { 1 } else { multiplier(cfg.rng_seed, COL_STREAM, j as u64, modulus) })
            .collect();
        let cells = n.checked_mul(width).ok_or(Error::Overflow)?;
        Ok(FoldedMatrix { cfg, modulus, width, data: vec![0; cells], col_mult, rows_ingested: 0 })
    }

    pub fn config(&self) -> &FoldConfig {
        &self.cfg
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn n_rows(&self) -> usize {
        self.cfg.n_rows_folded
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows_ingested(&self) -> u64 {
        self.rows_ingested
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub(crate) fn restore(&mut self, data: Vec<u32>, rows_ingested: u64) {
        debug_assert_eq!(data.len(), self.data.len());
        self.data = data;
        self.rows_ingested = rows_ingested;
    }

    pub fn row_multiplier(&self, row_index: u64) -> u32 {
        if row_index < self.cfg.n_rows_folded as u64 {
            1
        } else {
            multiplier(self.cfg.rng_seed, ROW_STREAM, row_index, self.modulus)
        }
    }

    pub fn col_multiplier(&self, col: usize) -> u32 {
        self.col_mult[col]
    }

    fn check_row(&self, entries: &[(usize, u32)]) -> Result<()> {
        for &(j, v) in entries {
            if j >= self.cfg.n_cols_logical {
                return Err(Error::ColumnOutOfRange { col: j, width: self.cfg.n_cols_logical });
            }
            if v as u64 >= self.modulus.get() {
                return Err(Error::OutOfRange(format!("entry {v} is not reduced mod {}", self.modulus.get())));
            }
        }
        Ok(())
    }

    fn accumulate(&self, target: &mut [u32], row_index: u64, entries: &[(usize, u32)]) {
        let m = self.modulus;
        let rm = self.row_multiplier(row_index);
        for &(j, v) in entries {
            let scaled = m.mul(m.mul(v, self.col_mult[j]), rm);
            let cell = &mut target[j % self.width];
            *cell = m.add(*cell, scaled);
        }
    }

    /// Adds one logical row.
    pub fn ingest_row(&mut self, row_index: u64, entries: &[(usize, u32)]) -> Result<()> {
        self.check_row(entries)?;
        if self.width > 0 {
            let target = (row_index % self.cfg.n_rows_folded as u64) as usize;
            let mut row = std::mem::take(&mut self.data);
            self.accumulate(&mut row[target * self.width..(target + 1) * self.width], row_index, entries);
            self.data = row;
        }
        self.rows_ingested += 1;
        Ok(())
    }

    /// Adds a batch of logical rows, accumulating distinct physical rows in
    /// parallel. Equivalent to calling [`ingest_row`](Self::ingest_row) on
    /// each in any order.
    pub fn ingest_batch(&mut self, rows: &[(u64, SparseRow)]) -> Result<()> {
        for (_, entries) in rows {
            self.check_row(entries)?;
        }
        if self.width > 0 {
            let n = self.cfg.n_rows_folded as u64;
            let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); self.cfg.n_rows_folded];
            for (k, (idx, _)) in rows.iter().enumerate() {
                buckets[(idx % n) as usize].push(k);
            }
            let mut data = std::mem::take(&mut self.data);
            let this = &*self;
            data.par_chunks_mut(this.width).zip(buckets.par_iter()).for_each(|(target, bucket)| {
                for &k in bucket {
                    this.accumulate(target, rows[k].0, &rows[k].1);
                }
            });
            self.data = data;
        }
        self.rows_ingested += rows.len() as u64;
        Ok(())
    }

    /// Rank over F_p of the folded contents.
    pub fn rank_mod_p(&self) -> usize {
        let mut data = self.data.clone();
        rank_dense_mod_p(&mut data, self.cfg.n_rows_folded, self.width, self.modulus)
    }

    /// As [`rank_mod_p`](Self::rank_mod_p), eliminating in place.
    pub fn into_rank(mut self) -> usize {
        rank_dense_mod_p(&mut self.data, self.cfg.n_rows_folded, self.width, self.modulus)
    }
}

fn swap_rows(data: &mut [u32], cols: usize, a: usize, b: usize) {
    let (lo, hi) = (a.min(b), a.max(b));
    let (first, second) = data.split_at_mut(hi * cols);
    first[lo * cols..(lo + 1) * cols].swap_with_slice(&mut second[..cols]);
}

/// Rank of a dense row-major `rows × cols` matrix over F_p, destroying it.
///
/// Pivots are the first nonzero entry in row order within each column, so
/// the elimination sequence is fixed; only the row updates of each pivot
/// step run in parallel.
pub fn rank_dense_mod_p(data: &mut [u32], rows: usize, cols: usize, m: Modulus) -> usize {
    assert_eq!(data.len(), rows * cols);
    let p = m.get();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| data[i * cols + c] != 0) else { continue };
        if pivot != rank {
            swap_rows(data, cols, pivot, rank);
        }
        let (top, bottom) = data.split_at_mut((rank + 1) * cols);
        let prow = &mut top[rank * cols..];
        let inv = m.inv(prow[c]);
        for x in &mut prow[c..] {
            *x = m.mul(*x, inv);
        }
        let prow = &*prow;
        let update = |row: &mut [u32]| {
            let f = row[c];
            if f == 0 {
                return;
            }
            let nf = p - f as u64;
            for (x, &y) in row[c..].iter_mut().zip(&prow[c..]) {
                *x = ((*x as u64 + nf * y as u64) % p) as u32;
            }
        };
        if bottom.len() >= PAR_THRESHOLD {
            bottom.par_chunks_mut(cols).for_each(update);
        } else {
            bottom.chunks_mut(cols).for_each(update);
        }
        rank += 1;
    }
    rank
}
