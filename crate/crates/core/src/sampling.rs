//! Seeded, platform-independent sampling for the verification suites.

use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

pub(crate) struct Sampler {
    rng: ChaCha12Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha12Rng::seed_from_u64(seed) }
    }

    /// Uniform draw from `[0, n)` by rejection; `n > 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        if n.is_power_of_two() {
            return self.rng.next_u64() & (n - 1);
        }
        let zone = u64::MAX - (u64::MAX % n + 1) % n;
        loop {
            let v = self.rng.next_u64();
            if v <= zone {
                return v % n;
            }
        }
    }
}
