//! Reproducible random streams.
//!
//! Every random decision draws from a ChaCha8 generator keyed by a 64-bit
//! seed and a 64-bit stream id. ChaCha output is fully specified and
//! platform-independent, and distinct stream ids give independent sequences,
//! so iterations can be sampled in any order (or concurrently) and still
//! produce the same result.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

pub fn stream_rng(seed: u64, stream: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform index in `0..n`, sampled through `u64` so results do not depend on
/// the platform's pointer width.
#[inline]
pub fn uniform_index(rng: &mut impl Rng, n: usize) -> usize {
    rng.gen_range(0..n as u64) as usize
}
