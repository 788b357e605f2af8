//! In-place radix-2 FFT with bit-reversed output.
//!
//! Level `k` pairs entries `2^k (2i) + j` and `2^k (2i + 1) + j` under the
//! twiddle `omega^[2i]_p`. Visiting blocks in the order `i = [t]_{p-k-1}`
//! makes the twiddles successive powers `(omega^(2^k))^t`, so they are kept
//! as a running product instead of a table.

use crate::bits::{bitrev_permute, reverse_bits};
use crate::butterfly;
use crate::error::{Error, Result};
use crate::ring::TransformRing;

/// Overwrites `buf` with `DFT_omega(buf)` in bit-reversed order: entry `j`
/// holds the evaluation at `omega^[j]_p`.
///
/// `omega` must have order exactly `2^log_n`; `log_n = 0` is the identity.
pub fn fft_in_place<R: TransformRing>(ring: &R, log_n: u32, omega: R::Elem, buf: &mut [R::Elem]) -> Result<()> {
    if log_n >= usize::BITS || buf.len() != 1usize << log_n {
        return Err(Error::Length {
            expected: 1usize.checked_shl(log_n).unwrap_or(0),
            actual: buf.len(),
        });
    }
    if log_n >= 1 && !ring.has_two_power_order(omega, log_n) {
        return Err(Error::Parameter(format!("root does not have order 2^{log_n}")));
    }

    for k in (0..log_n).rev() {
        let half = 1usize << k;
        let block_bits = log_n - k - 1;
        let mut step = omega;
        for _ in 0..k {
            step = ring.mul_root(step, step);
        }
        let mut twiddle = step;
        for t in 0..1usize << block_bits {
            let base = 2 * half * reverse_bits(t, block_bits);
            match t {
                0 => {
                    for j in 0..half {
                        butterfly::plain(ring, buf, base + j, base + half + j);
                    }
                    continue;
                }
                1 => {}
                _ => twiddle = ring.mul_root(twiddle, step),
            }
            for j in 0..half {
                butterfly::forward(ring, buf, base + j, base + half + j, twiddle);
            }
        }
    }
    Ok(())
}

/// [`fft_in_place`] followed by the bit-reversal permutation, leaving the
/// evaluation at `omega^i` in entry `i`.
pub fn dft_natural_order<R: TransformRing>(ring: &R, log_n: u32, omega: R::Elem, buf: &mut [R::Elem]) -> Result<()> {
    fft_in_place(ring, log_n, omega, buf)?;
    bitrev_permute(buf, log_n)
}
