//! Seedable randomness. Every random draw in the crate goes through a
//! caller-owned generator, so a seed fixes a whole run.

use rand_chacha::ChaCha20Rng;
use rand_core::SeedableRng;

pub type DeterministicRng = ChaCha20Rng;

pub fn seeded(seed: u64) -> DeterministicRng {
    ChaCha20Rng::seed_from_u64(seed)
}
