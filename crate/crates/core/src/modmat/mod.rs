//! Modular linear algebra.
//!
//! Logical matrices are never materialized: rows are folded into a dense
//! square [`FoldedMatrix`] over F_p as they arrive, and the rank is computed
//! by dense Gaussian elimination with parallel row updates. The [`exact`]
//! submodule holds the rational oracles the folded ranks are checked against.

mod checkpoint;
pub mod exact;
mod fold;
pub mod trials;

pub use exact::{exact_rank, DEFAULT_EXACT_GUARD};
pub use fold::{rank_dense_mod_p, FoldConfig, FoldedMatrix, SparseRow};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::scalar::Modulus;

pub const DEFAULT_PRIME: u64 = 3323;

/// Checks that `p` is an odd prime usable for all weights up to `w_max`.
///
/// The pipelines divide by 2 and by D+1 ≤ W+1, so `p` must not divide any
/// integer in `[2, w_max + 1]`, i.e. `p > w_max + 1`.
pub fn validate_prime(p: u64, w_max: usize) -> Result<Modulus> {
    let reject = |reason: String| Err(Error::InvalidPrime { p, reason });
    if p == 2 {
        return reject("division by 2 is required".into());
    }
    if !is_prime(p) {
        return reject("not prime".into());
    }
    if p > u32::MAX as u64 {
        return reject("must be below 2^32".into());
    }
    if p <= w_max as u64 + 1 {
        return reject(format!("divides a denominator D+1 <= {}", w_max + 1));
    }
    Ok(Modulus::new(p).expect("odd prime below 2^32"))
}
