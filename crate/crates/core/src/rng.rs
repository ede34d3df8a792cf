/// SplitMix64: a tiny deterministic generator for sampled scans.
///
/// Every sampled check in this crate records its seed, and the same seed
/// must reproduce the same tuples on any platform and any dependency
/// version, so we keep the generator in-tree rather than pulling in an
/// external RNG.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` (`bound > 0`), by rejection.
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        let bound = bound as u64;
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return (v % bound) as usize;
            }
        }
    }

    /// Uniform draw from `[-1, 1]`.
    pub fn next_unit_f64(&mut self) -> f64 {
        // 53 random mantissa bits, then rescale.
        let v = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        2.0 * v - 1.0
    }
}
