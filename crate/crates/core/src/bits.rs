//! Bit-reversal indexing.

use crate::error::{Error, Result};

/// `[i]_k`: reverses the low `k` bits of `i`. Callers guarantee `i < 2^k`.
#[inline]
pub fn reverse_bits(i: usize, k: u32) -> usize {
    if k == 0 {
        return 0;
    }
    i.reverse_bits() >> (usize::BITS - k)
}

/// Checked `[i]_k`.
pub fn bit_reverse(i: usize, k: u32) -> Result<usize> {
    if k >= usize::BITS || i >> k != 0 {
        return Err(Error::IndexRange { index: i, bits: k });
    }
    Ok(reverse_bits(i, k))
}

/// Swaps entry `i` with entry `[i]_k` for every `i < [i]_k`.
///
/// Walks indices one at a time with no lookup table, so the only extra state
/// is the loop counter.
pub fn bitrev_permute<T>(buffer: &mut [T], k: u32) -> Result<()> {
    if k >= usize::BITS || buffer.len() != 1usize << k {
        return Err(Error::Length {
            expected: 1usize.checked_shl(k).unwrap_or(0),
            actual: buffer.len(),
        });
    }
    for i in 0..buffer.len() {
        let j = reverse_bits(i, k);
        if i < j {
            buffer.swap(i, j);
        }
    }
    Ok(())
}

/// `ceil(log2 n)` for `n >= 1`.
#[inline]
pub fn ceil_log2(n: usize) -> u32 {
    debug_assert!(n >= 1);
    usize::BITS - (n - 1).leading_zeros()
}

/// `floor(log2 n)` for `n >= 1`.
#[inline]
pub fn floor_log2(n: usize) -> u32 {
    debug_assert!(n >= 1);
    usize::BITS - 1 - n.leading_zeros()
}
