//! Edge-length vectors packed into a `u64`, a fixed-width field per length.
//! Used as hash keys in the exhaustive searches.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub(crate) struct Packing {
    bits: u32,
    d: usize,
}

impl Packing {
    /// Every count is at most `n`, so `bit_width(n)` bits per field suffice.
    pub(crate) fn new(n: usize) -> Result<Self> {
        let bits = usize::BITS - n.leading_zeros();
        let d = n / 2;
        if bits as usize * d > 64 {
            return Err(Error::ResourceLimit { what: "packed edge-length key for", n, bound: 24 });
        }
        Ok(Self { bits, d })
    }

    /// Increment of the field for length `len` (1-based).
    #[inline]
    pub(crate) fn unit(&self, len: usize) -> u64 {
        1u64 << (self.bits as usize * (len - 1))
    }

    pub(crate) fn unpack(&self, key: u64) -> Vec<usize> {
        let mask = (1u64 << self.bits) - 1;
        (0..self.d).map(|i| ((key >> (self.bits as usize * i)) & mask) as usize).collect()
    }
}
