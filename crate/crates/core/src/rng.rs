//! Deterministic random stream for reproducible growth.
//!
//! Implements the splitmix64 reference generator so identical seeds give
//! identical graphs on every platform. Bounded draws use rejection sampling,
//! which keeps them exactly uniform.

/// Seeded 64-bit generator with a fixed published sequence.
#[derive(Clone, Debug)]
pub struct RngStream {
    state: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream { state: seed }
    }

    /// Next raw 64-bit value of the splitmix64 sequence for this seed.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..k` with no modulo bias.
    pub fn below(&mut self, k: u64) -> u64 {
        assert!(k > 0, "bounded draw from an empty range");
        // Largest multiple of k representable in 64 bits; values at or above
        // it are rejected so every residue is equally likely.
        let zone = ((1u128 << 64) / k as u128) * k as u128;
        loop {
            let x = self.next_u64();
            if (x as u128) < zone {
                return x % k;
            }
        }
    }
}
