//! In-place inverse truncated Fourier transform.
//!
//! Undoes [`crate::tft::tft_in_place`] by running its passes backwards on the
//! weighted values `2^k a_{k,i}`. Working with the weighted values lets every
//! inverse butterfly skip its factor `2^-1`; the accumulated powers of `2^-1`
//! are applied once at the end, to the gap entries and inside the closing
//! level `m-1` butterflies. Doublings are realised as additions.

use crate::butterfly;
use crate::error::{Error, Result};
use crate::ring::{square_and_multiply, TransformRing};
use crate::slots::Slots;
use crate::tft::{Level, TransformPlan};
use crate::twiddle::{PairStream, TwiddleContext};

/// Replaces `buf`, holding the truncated transform of some vector `a` under
/// `plan`, with `a` itself. Requires `plan.half()`.
pub fn itft_in_place<R, B>(ring: &R, plan: &TransformPlan<R::Elem>, buf: &mut B) -> Result<()>
where
    R: TransformRing,
    B: Slots<R::Elem> + ?Sized,
{
    plan.check_len(buf.len())?;
    let half_unit = plan.half().ok_or(Error::UnsupportedRing)?;
    let ell = plan.ell();
    if ell == 1 {
        return Ok(());
    }
    let (m, v) = (plan.m(), plan.v());
    let top = 1usize << (m - 1);
    let psi = plan.psi();
    let twiddles = TwiddleContext::new(ring, m, psi)?;
    // psi^-1 = psi^(2^m - 1)
    let psi_inv = square_and_multiply(psi, (1u64 << m) - 1, ring.one(), |a, b| ring.mul_root(a, b));

    // Unscaled inverse butterflies over the full blocks, k = 0 up to m-2.
    for k in 0..m - 1 {
        let half = 1usize << k;
        let q = ell >> (k + 1);
        for j in 0..half {
            butterfly::plain(ring, buf, j, half + j);
        }
        for (i, alpha) in PairStream::new(ring, m, psi_inv, q)? {
            let base = 2 * half * i;
            for j in 0..half {
                butterfly::inverse(ring, buf, base + j, base + half + j, alpha);
            }
        }
    }

    // Undo the restore pass, k = m-2 down to v+1.
    for k in (v + 1..m.saturating_sub(1)).rev() {
        let lv = Level::new(ell, m, k);
        let alpha = twiddles.forward(ring, k, lv.q)?;
        if lv.r > lv.half {
            for j in lv.r - lv.half..lv.half {
                let (a, b) = (lv.even(lv.q, j), lv.odd(lv.q_mirror, j));
                let t = ring.mul_root(buf.get(b), alpha);
                let x = buf.get(a);
                buf.set(b, ring.sub(x, t));
            }
        } else {
            for j in lv.r..lv.half {
                let (a, b) = (lv.even(lv.q_mirror, j), lv.odd(lv.q_mirror, j));
                let t = ring.mul_root(buf.get(b), alpha);
                let x = buf.get(a);
                buf.set(a, ring.mul_pow2(ring.add(x, t), half_unit));
            }
        }
    }

    // Undo the rightmost-branch descent, k = v up to m-2.
    for k in v..m.saturating_sub(1) {
        let lv = Level::new(ell, m, k);
        if lv.r > lv.half {
            let alpha = twiddles.inverse(ring, k, lv.q)?;
            for j in 0..lv.r - lv.half {
                butterfly::inverse(ring, buf, lv.even(lv.q, j), lv.odd(lv.q, j), alpha);
            }
            for j in lv.r - lv.half..lv.half {
                butterfly::inverse(ring, buf, lv.even(lv.q, j), lv.odd(lv.q_mirror, j), alpha);
            }
        } else {
            let alpha = twiddles.forward(ring, k, lv.q)?;
            // x <- 2x - alpha y
            for j in 0..lv.r {
                let (a, b) = (lv.even(lv.q, j), lv.odd(lv.q_mirror, j));
                let t = ring.mul_root(buf.get(b), alpha);
                let x = buf.get(a);
                buf.set(a, ring.sub(ring.double(x), t));
            }
            for j in lv.r..lv.half {
                let (a, b) = (lv.even(lv.q_mirror, j), lv.odd(lv.q_mirror, j));
                let t = ring.mul_root(buf.get(b), alpha);
                let x = buf.get(a);
                buf.set(a, ring.sub(ring.double(x), t));
            }
        }
    }

    // Remove the weights: 2^-(m-1) on the gap, 2^-m in the closing butterflies.
    let gap_scale = square_and_multiply(half_unit, (m - 1) as u64, ring.one(), |a, b| ring.mul_pow2(a, b));
    for j in ell - top..top {
        let x = buf.get(j);
        buf.set(j, ring.mul_pow2(x, gap_scale));
    }
    let closing_scale = if m == 1 {
        half_unit
    } else {
        ring.mul_pow2(gap_scale, half_unit)
    };
    for j in 0..ell - top {
        let x = buf.get(j);
        let y = buf.get(top + j);
        buf.set(j, ring.mul_pow2(ring.add(x, y), closing_scale));
        buf.set(top + j, ring.mul_pow2(ring.sub(x, y), closing_scale));
    }
    Ok(())
}
