//! Seeded random streams.
//!
//! Every independent stream (a search trial, a simulation shard) is a
//! ChaCha8 generator seeded with `splitmix64(splitmix64(master) + index)`.
//! Mixing the master seed first keeps the streams of nearby master seeds
//! apart. The output is identical across platforms and independent of
//! thread count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// Identifier recorded in output metadata.
pub const RNG_ALGORITHM: &str = "chacha8/splitmix64-split";

/// SplitMix64 finalizer.
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master).wrapping_add(index))
}

pub fn stream(master: u64, index: u64) -> StreamRng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, index))
}
