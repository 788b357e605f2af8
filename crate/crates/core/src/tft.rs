//! In-place forward truncated Fourier transform.
//!
//! For `2^(m-1) < l <= 2^m` the transform evaluates the polynomial with
//! coefficients `x[0..l]` at the points `psi^[i]_m`, `i < l`, where `psi` has
//! order `2^m`, and writes the values back over the coefficients. The
//! computation is the radix-2 FFT of the zero-padded input restricted to the
//! entries that matter. Entries that would live beyond `l` are parked in the
//! gap `x[l - 2^(m-1)..2^(m-1)]` and later restored, so nothing outside the
//! input array is ever touched.
//!
//! Passes:
//! 1. fold level `m-1` using the zero padding;
//! 2. walk the rightmost branch down from level `m-2` to `v = ord2(l)`;
//! 3. walk back up, restoring the level `m-1` values in the gap;
//! 4. finish the remaining full butterfly blocks from level `m-2` down to 0.
//!
//! No step divides by two, so any ring with a suitable root works.

use crate::bits::ceil_log2;
use crate::butterfly;
use crate::error::{Error, Result};
use crate::ring::{Fp, PrimeField, TransformRing};
use crate::slots::Slots;
use crate::twiddle::{PairStream, TwiddleContext};

/// Validated parameters for transforms of length `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransformPlan<E> {
    ell: usize,
    m: u32,
    v: u32,
    psi: E,
    half: Option<E>,
}

impl TransformPlan<Fp> {
    /// Plan over a prime field, using `root_of_order(ceil(log2 ell))`.
    pub fn new(field: &PrimeField, ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Parameter("transform length must be at least 1".into()));
        }
        let m = ceil_log2(ell);
        if m > field.two_adicity() {
            return Err(Error::Capacity {
                ell,
                two_adicity: field.two_adicity(),
            });
        }
        let psi = field.root_of_order(m)?;
        Self::with_root(field, ell, psi, Some(field.half()))
    }
}

impl<E: Copy + PartialEq> TransformPlan<E> {
    /// Plan from an explicit root `psi` of order `2^ceil(log2 ell)`.
    ///
    /// `half` is `2^-1` when 2 is a unit; without it the plan only supports
    /// the forward transform.
    pub fn with_root<R: TransformRing<Elem = E>>(ring: &R, ell: usize, psi: E, half: Option<E>) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Parameter("transform length must be at least 1".into()));
        }
        let m = ceil_log2(ell);
        let order_ok = if m == 0 {
            psi == ring.one()
        } else {
            ring.has_two_power_order(psi, m)
        };
        if !order_ok {
            return Err(Error::Parameter(format!("root does not have order 2^{m}")));
        }
        if let Some(h) = half {
            if ring.add(h, h) != ring.one() {
                return Err(Error::Parameter("supplied inverse of 2 is wrong".into()));
            }
        }
        Ok(Self {
            ell,
            m,
            v: ell.trailing_zeros(),
            psi,
            half,
        })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `ceil(log2 ell)`.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// `ord2(ell)`.
    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn psi(&self) -> E {
        self.psi
    }

    pub fn half(&self) -> Option<E> {
        self.half
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ell {
            return Err(Error::Length {
                expected: self.ell,
                actual: len,
            });
        }
        Ok(())
    }
}

/// Per-level block data: `q = floor(l / 2^(k+1))`, `r = l - 2^(k+1) q`, and
/// `q' = q - 2^(m-k-2)`, the block that mirrors `q` inside the gap.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Level {
    pub half: usize,
    pub q: usize,
    pub r: usize,
    pub q_mirror: usize,
}

impl Level {
    pub fn new(ell: usize, m: u32, k: u32) -> Self {
        let q = ell >> (k + 1);
        Self {
            half: 1 << k,
            q,
            r: ell - (q << (k + 1)),
            q_mirror: q - (1 << (m - k - 2)),
        }
    }

    /// Index of entry `j` of the even half of block `block`.
    #[inline]
    pub fn even(&self, block: usize, j: usize) -> usize {
        2 * self.half * block + j
    }

    #[inline]
    pub fn odd(&self, block: usize, j: usize) -> usize {
        self.half * (2 * block + 1) + j
    }
}

/// Replaces `buf` (length `plan.ell()`) with its truncated Fourier transform:
/// entry `i` becomes `f(psi^[i]_m)` where `f` has the input as coefficients.
pub fn tft_in_place<R, B>(ring: &R, plan: &TransformPlan<R::Elem>, buf: &mut B) -> Result<()>
where
    R: TransformRing,
    B: Slots<R::Elem> + ?Sized,
{
    plan.check_len(buf.len())?;
    let ell = plan.ell;
    if ell == 1 {
        return Ok(());
    }
    let (m, v) = (plan.m, plan.v);
    let top = 1usize << (m - 1);
    let twiddles = TwiddleContext::new(ring, m, plan.psi)?;

    // Level m-1 from the implicit zero padding.
    for j in 0..ell - top {
        butterfly::plain(ring, buf, j, top + j);
    }

    // Rightmost branch, k = m-2 down to v. Empty when ell = 2^m.
    for k in (v..m.saturating_sub(1)).rev() {
        let lv = Level::new(ell, m, k);
        let alpha = twiddles.forward(ring, k, lv.q)?;
        if lv.r > lv.half {
            for j in 0..lv.r - lv.half {
                butterfly::forward(ring, buf, lv.even(lv.q, j), lv.odd(lv.q, j), alpha);
            }
            // (x, y) <- (y, x - alpha y): the odd output goes to the gap and the
            // even slot keeps y until the restore pass repairs it.
            for j in lv.r - lv.half..lv.half {
                let (a, b) = (lv.even(lv.q, j), lv.odd(lv.q_mirror, j));
                let x = buf.get(a);
                let y = buf.get(b);
                buf.set(a, y);
                buf.set(b, ring.sub(x, ring.mul_root(y, alpha)));
            }
        } else {
            for j in 0..lv.r {
                let (a, b) = (lv.even(lv.q, j), lv.odd(lv.q_mirror, j));
                let t = ring.mul_root(buf.get(b), alpha);
                let x = buf.get(a);
                buf.set(a, ring.add(x, t));
            }
            for j in lv.r..lv.half {
                let (a, b) = (lv.even(lv.q_mirror, j), lv.odd(lv.q_mirror, j));
                let t = ring.mul_root(buf.get(b), alpha);
                let x = buf.get(a);
                buf.set(a, ring.add(x, t));
            }
        }
    }

    // Restore the gap, k = v+1 up to m-2.
    for k in v + 1..m.saturating_sub(1) {
        let lv = Level::new(ell, m, k);
        let alpha = twiddles.forward(ring, k, lv.q)?;
        if lv.r > lv.half {
            // (x, y) <- (2 alpha x + y, x)
            for j in lv.r - lv.half..lv.half {
                let (a, b) = (lv.even(lv.q, j), lv.odd(lv.q_mirror, j));
                let x = buf.get(a);
                let y = buf.get(b);
                let t = ring.mul_root(x, alpha);
                buf.set(a, ring.add(ring.double(t), y));
                buf.set(b, x);
            }
        } else {
            for j in lv.r..lv.half {
                let (a, b) = (lv.even(lv.q_mirror, j), lv.odd(lv.q_mirror, j));
                let t = ring.mul_root(buf.get(b), alpha);
                let x = buf.get(a);
                buf.set(a, ring.sub(x, t));
            }
        }
    }

    // Remaining full blocks, k = m-2 down to 0.
    for k in (0..m - 1).rev() {
        let half = 1usize << k;
        let q = ell >> (k + 1);
        for j in 0..half {
            butterfly::plain(ring, buf, j, half + j);
        }
        for (i, alpha) in PairStream::new(ring, m, plan.psi, q)? {
            let base = 2 * half * i;
            for j in 0..half {
                butterfly::forward(ring, buf, base + j, base + half + j, alpha);
            }
        }
    }
    Ok(())
}
