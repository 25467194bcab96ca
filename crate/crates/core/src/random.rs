//! Seeded randomness. Every sampling routine takes an explicit seed so that
//! reports are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Scalar};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent per-task seed from a master seed and a task key.
pub fn derive_seed(master: u64, key: &str) -> u64 {
    // FNV-1a over the key, mixed with the master seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ master.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for b in key.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// A non-zero vector with small integer entries, roughly half of them zero.
pub fn sparse_vector(field: Field, n: usize, rng: &mut SeededRng) -> Vec<Scalar> {
    loop {
        let v: Vec<Scalar> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    field.zero()
                } else {
                    field.from_i64(rng.gen_range(-2..=2))
                }
            })
            .collect();
        if v.iter().any(|s| !s.is_zero()) {
            return v;
        }
    }
}

/// A vector with entries drawn uniformly from `-bound..=bound`.
pub fn dense_vector(field: Field, n: usize, bound: i64, rng: &mut SeededRng) -> Vec<Scalar> {
    (0..n).map(|_| field.from_i64(rng.gen_range(-bound..=bound))).collect()
}
