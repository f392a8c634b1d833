//! Seed derivation for independent, reproducible RNG streams.
//!
//! Every stochastic component takes a stream derived from the experiment
//! seed plus a path of tags (fold, trait, participant, ...), so parallel
//! workers never share state and results do not depend on scheduling.

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

/// splitmix64 finalizer; good avalanche for combining seed material.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives a child seed from a base seed and a path of stream tags.
pub fn derive_seed(base: u64, path: &[u64]) -> u64 {
    let mut state = mix(base);
    for &tag in path {
        state = mix(state ^ mix(tag));
    }
    state
}

/// Independent RNG stream for `(base, path)`.
pub fn stream(base: u64, path: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(base, path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn streams_are_deterministic_and_distinct() {
        let mut a = stream(42, &[1, 2]);
        let mut b = stream(42, &[1, 2]);
        let mut c = stream(42, &[2, 1]);
        let xa: u64 = a.random();
        let xb: u64 = b.random();
        let xc: u64 = c.random();
        assert_eq!(xa, xb);
        assert_ne!(xa, xc);
    }

    #[test]
    fn path_is_not_flattened() {
        // [1, 2] and [mix-equivalent single tag] must differ; in particular
        // an empty path differs from [0].
        assert_ne!(derive_seed(7, &[]), derive_seed(7, &[0]));
        assert_ne!(derive_seed(7, &[1, 2]), derive_seed(7, &[2, 1]));
    }
}
