//! Seeded random sampling for property and oracle runs.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed used by every check that does not take one explicitly.
pub const DEFAULT_SEED: u64 = 0x7c0f_fee5_2024;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `p, q` uniform in `[1, 100]`.
pub fn positive_rational<R: Rng>(rng: &mut R) -> BigRational {
    let p: i64 = rng.gen_range(1..=100);
    let q: i64 = rng.gen_range(1..=100);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn positive_point<R: Rng>(rng: &mut R, n: usize) -> Vec<BigRational> {
    (0..n).map(|_| positive_rational(rng)).collect()
}

/// Integer vector with entries uniform in `[lo, hi]`.
pub fn int_vec<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}
