//! Small deterministic helpers.

/// SplitMix64: a tiny deterministic generator for seeded sampling. The
/// stream is fixed by the seed alone, so reports and tests are exactly
/// reproducible across platforms and releases.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Small signed integer in `[-range, range]`.
    pub fn small_int(&mut self, range: i64) -> i64 {
        (self.below((2 * range + 1) as u64) as i64) - range
    }
}
