//! Seed derivation.
//!
//! Every random draw comes from a ChaCha8 stream keyed by
//! `(master_seed, stream_index)` and selected by a replication index, so
//! results do not depend on thread count or scheduling order.
//!
//! Key layout (format version 1): bytes 0..8 hold `master_seed` and bytes
//! 8..16 hold `stream_index`, both little-endian; bytes 16..24 hold the tag
//! `b"zbgof-v1"`; the rest is zero. The replication index is the ChaCha
//! stream number. Changing any of this changes every simulated number, so
//! the tag must be bumped along with it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const KEY_TAG: &[u8; 8] = b"zbgof-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedSpec {
    pub master_seed: u64,
    pub stream_index: u64,
}

impl SeedSpec {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        Self {
            master_seed,
            stream_index,
        }
    }

    /// Same master seed, different stream.
    pub fn with_stream(self, stream_index: u64) -> Self {
        Self {
            stream_index,
            ..self
        }
    }

    pub fn rng(&self, replication: u64) -> ChaCha8Rng {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&self.master_seed.to_le_bytes());
        key[8..16].copy_from_slice(&self.stream_index.to_le_bytes());
        key[16..24].copy_from_slice(KEY_TAG);
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(replication);
        rng
    }
}

impl Default for SeedSpec {
    fn default() -> Self {
        Self::new(20_200_531, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let s = SeedSpec::new(7, 3);
        assert_eq!(s.rng(5).next_u64(), s.rng(5).next_u64());
        assert_ne!(s.rng(5).next_u64(), s.rng(6).next_u64());
        assert_ne!(s.rng(5).next_u64(), s.with_stream(4).rng(5).next_u64());
        assert_ne!(s.rng(5).next_u64(), SeedSpec::new(8, 3).rng(5).next_u64());
    }

    #[test]
    fn frozen_output() {
        // Guards the documented key layout against accidental changes.
        let v = SeedSpec::new(1, 0).rng(0).next_u64();
        assert_eq!(v, FROZEN_FIRST_WORD);
    }

    const FROZEN_FIRST_WORD: u64 = 18_295_129_203_994_477_184;
}
