//! Portable seeded randomness.
//!
//! [`Prng`] is splitmix64: a 64-bit counter advanced by the golden-ratio
//! increment and passed through a fixed mixing function. It is tiny, has no
//! platform-dependent behaviour, and every consumer below documents exactly
//! which draws it makes, so outputs are reproducible across implementations.
//!
//! Draw order:
//! * [`Prng::uniform_below`] draws until a value falls below the largest
//!   multiple of `m` not exceeding `2^64` and returns it modulo `m`.
//! * [`Prng::choose`] makes no draw for a single-element slice.
//! * [`Prng::shuffle`] is Fisher–Yates from the back: for `i` from `len - 1`
//!   down to `1`, swap `i` with `uniform_below(i + 1)`.
//! * [`Prng::assign_blocks`] draws `uniform_below(k)` for vertices `1..=n`
//!   in ascending order.
//! * Independent streams for parallel work come from [`derive_seed`].

use alloc::vec::Vec;

use crate::mechanisms::BlockAssignment;
use crate::{Error, Result};

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the `index`-th independent stream under a master seed: one
/// splitmix64 step taken from state `seed ^ index`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    mix((seed ^ index).wrapping_add(GAMMA))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prng {
    state: u64,
}

impl Prng {
    pub const fn new(seed: u64) -> Prng {
        Prng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Exactly uniform integer in `[0, m)`.
    pub fn uniform_below(&mut self, m: u64) -> Result<u64> {
        if m == 0 {
            return Err(Error::EmptyRange);
        }
        Ok(self.below(m))
    }

    #[inline]
    pub(crate) fn below(&mut self, m: u64) -> u64 {
        debug_assert!(m > 0);
        // 2^64 mod m; values at or above 2^64 - rem would bias the result.
        let rem = (u64::MAX % m + 1) % m;
        loop {
            let x = self.next_u64();
            if rem == 0 || x < rem.wrapping_neg() {
                return x % m;
            }
        }
    }

    /// A uniformly chosen element, or `None` for an empty slice.
    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> Option<&'a T> {
        match items.len() {
            0 => None,
            1 => Some(&items[0]),
            len => Some(&items[self.below(len as u64) as usize]),
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// Places each of `n` vertices into one of `k` blocks independently and
    /// uniformly.
    pub fn assign_blocks(&mut self, n: usize, k: usize) -> Result<BlockAssignment> {
        if k < 2 {
            return Err(Error::InvalidBlockCount(k));
        }
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let block_of: Vec<u32> = (0..n).map(|_| self.below(k as u64) as u32 + 1).collect();
        BlockAssignment::new(k, block_of)
    }
}
