//! 2x2 steps shared by the kernels. Each costs at most one multiplication.

use crate::ring::TransformRing;
use crate::slots::Slots;

/// `(x, y) <- (x + y, x - y)`.
#[inline]
pub(crate) fn plain<R, B>(ring: &R, buf: &mut B, a: usize, b: usize)
where
    R: TransformRing,
    B: Slots<R::Elem> + ?Sized,
{
    let x = buf.get(a);
    let y = buf.get(b);
    buf.set(a, ring.add(x, y));
    buf.set(b, ring.sub(x, y));
}

/// `(x, y) <- (x + w y, x - w y)`.
#[inline]
pub(crate) fn forward<R, B>(ring: &R, buf: &mut B, a: usize, b: usize, w: R::Elem)
where
    R: TransformRing,
    B: Slots<R::Elem> + ?Sized,
{
    let x = buf.get(a);
    let t = ring.mul_root(buf.get(b), w);
    buf.set(a, ring.add(x, t));
    buf.set(b, ring.sub(x, t));
}

/// `(x, y) <- (x + y, w (x - y))`, the unscaled inverse of [`forward`] when
/// `w` is the inverse twiddle.
#[inline]
pub(crate) fn inverse<R, B>(ring: &R, buf: &mut B, a: usize, b: usize, w: R::Elem)
where
    R: TransformRing,
    B: Slots<R::Elem> + ?Sized,
{
    let x = buf.get(a);
    let y = buf.get(b);
    buf.set(a, ring.add(x, y));
    buf.set(b, ring.mul_root(ring.sub(x, y), w));
}
