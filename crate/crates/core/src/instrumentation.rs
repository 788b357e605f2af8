//! Operation counting and buffer access auditing.
//!
//! [`CountingRing`] wraps any [`TransformRing`] and tallies each call by
//! class. [`AuditBuffer`] records the index range a kernel touches.
//! [`bound_check`] compares a tally with the proven operation bounds for the
//! forward and inverse truncated transforms and the power-of-two FFT.

use std::cell::Cell;
use std::fmt;

use crate::bits::{ceil_log2, floor_log2};
use crate::ring::TransformRing;
use crate::slots::Slots;

/// Per-class operation tallies for one measurement.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpCounters {
    /// Multiplications by powers of the root of unity.
    pub mul_root: u64,
    /// Multiplications by powers of `2^-1`.
    pub mul_pow2: u64,
    /// Additions and subtractions, doublings included.
    pub add_sub: u64,
    /// Every other multiplication.
    pub mul_other: u64,
    /// Root or `2^-1` multiplications whose multiplier was the identity.
    /// Only the constant operand is inspected, so the tally does not depend
    /// on the data.
    pub mul_by_one: u64,
}

impl OpCounters {
    pub fn total(&self) -> u64 {
        self.mul_root + self.mul_pow2 + self.add_sub + self.mul_other
    }
}

impl std::ops::Add for OpCounters {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            mul_root: self.mul_root + rhs.mul_root,
            mul_pow2: self.mul_pow2 + rhs.mul_pow2,
            add_sub: self.add_sub + rhs.add_sub,
            mul_other: self.mul_other + rhs.mul_other,
            mul_by_one: self.mul_by_one + rhs.mul_by_one,
        }
    }
}

/// A ring that counts every operation it forwards to `inner`.
#[derive(Debug)]
pub struct CountingRing<R> {
    inner: R,
    counters: Cell<OpCounters>,
}

impl<R: TransformRing> CountingRing<R> {
    pub fn new(inner: R) -> Self {
        Self {
            inner,
            counters: Cell::new(OpCounters::default()),
        }
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }

    pub fn counters(&self) -> OpCounters {
        self.counters.get()
    }

    /// Returns the tallies and zeroes them.
    pub fn take(&self) -> OpCounters {
        self.counters.replace(OpCounters::default())
    }

    #[inline]
    fn bump(&self, f: impl FnOnce(&mut OpCounters)) {
        let mut c = self.counters.get();
        f(&mut c);
        self.counters.set(c);
    }

    #[inline]
    fn note_mul(&self, multiplier: R::Elem, f: impl FnOnce(&mut OpCounters)) {
        let trivial = multiplier == self.inner.one();
        self.bump(|c| {
            f(c);
            if trivial {
                c.mul_by_one += 1;
            }
        });
    }
}

impl<R: TransformRing> TransformRing for CountingRing<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.inner.zero()
    }

    fn one(&self) -> R::Elem {
        self.inner.one()
    }

    fn add(&self, a: R::Elem, b: R::Elem) -> R::Elem {
        self.bump(|c| c.add_sub += 1);
        self.inner.add(a, b)
    }

    fn sub(&self, a: R::Elem, b: R::Elem) -> R::Elem {
        self.bump(|c| c.add_sub += 1);
        self.inner.sub(a, b)
    }

    fn mul(&self, a: R::Elem, b: R::Elem) -> R::Elem {
        self.bump(|c| c.mul_other += 1);
        self.inner.mul(a, b)
    }

    fn mul_root(&self, a: R::Elem, w: R::Elem) -> R::Elem {
        self.note_mul(w, |c| c.mul_root += 1);
        self.inner.mul_root(a, w)
    }

    fn mul_pow2(&self, a: R::Elem, s: R::Elem) -> R::Elem {
        self.note_mul(s, |c| c.mul_pow2 += 1);
        self.inner.mul_pow2(a, s)
    }

    fn neg(&self, a: R::Elem) -> R::Elem {
        self.bump(|c| c.add_sub += 1);
        self.inner.neg(a)
    }

    fn has_two_power_order(&self, root: R::Elem, log_order: u32) -> bool {
        self.inner.has_two_power_order(root, log_order)
    }
}

/// A buffer that records which indices a kernel touches.
///
/// Backing storage extends past the logical length (to twice the next power
/// of two) so that a stray access beyond `len` is recorded in `out_of_bounds`
/// rather than aborting the run. Accesses past the backing storage panic.
#[derive(Clone, Debug)]
pub struct AuditBuffer<E> {
    storage: Vec<E>,
    len: usize,
    lowest: Option<usize>,
    highest: Option<usize>,
    out_of_bounds: bool,
    reads: u64,
    writes: u64,
}

impl<E: Copy> AuditBuffer<E> {
    pub fn new(values: Vec<E>, filler: E) -> Self {
        let len = values.len();
        let mut storage = values;
        storage.resize(2 * len.max(1).next_power_of_two(), filler);
        Self {
            storage,
            len,
            lowest: None,
            highest: None,
            out_of_bounds: false,
            reads: 0,
            writes: 0,
        }
    }

    fn touch(&mut self, i: usize) {
        self.lowest = Some(self.lowest.map_or(i, |lo| lo.min(i)));
        self.highest = Some(self.highest.map_or(i, |hi| hi.max(i)));
        if i >= self.len {
            self.out_of_bounds = true;
        }
    }

    pub fn out_of_bounds(&self) -> bool {
        self.out_of_bounds
    }

    /// Smallest and largest index touched, if any.
    pub fn touched_range(&self) -> Option<(usize, usize)> {
        self.lowest.zip(self.highest)
    }

    pub fn reads(&self) -> u64 {
        self.reads
    }

    pub fn writes(&self) -> u64 {
        self.writes
    }

    /// The logical contents.
    pub fn as_slice(&self) -> &[E] {
        &self.storage[..self.len]
    }

    pub fn into_inner(mut self) -> Vec<E> {
        self.storage.truncate(self.len);
        self.storage
    }
}

impl<E: Copy> Slots<E> for AuditBuffer<E> {
    fn len(&self) -> usize {
        self.len
    }

    fn get(&mut self, i: usize) -> E {
        self.touch(i);
        self.reads += 1;
        self.storage[i]
    }

    fn set(&mut self, i: usize, value: E) {
        self.touch(i);
        self.writes += 1;
        self.storage[i] = value;
    }
}

/// Which transform a tally was taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformKind {
    Forward,
    Inverse,
    Fft,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Forward => "forward",
            Self::Inverse => "inverse",
            Self::Fft => "fft",
        })
    }
}

/// Slack constant on the `O(log^2 l)` twiddle term of the multiplication bounds.
pub const LOG_SQUARED_SLACK: u64 = 8;
/// Additive slack on the FFT multiplication bound.
pub const FFT_SLACK: u64 = 16;

/// Outcome of comparing one tally with its bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub ell: usize,
    pub kind: TransformKind,
    pub counters: OpCounters,
    /// Upper bound on `add_sub` (exact target for [`TransformKind::Fft`]).
    pub add_bound: u64,
    /// Upper bound on `mul_root`.
    pub mul_bound: u64,
    /// Upper bound on `mul_pow2`.
    pub pow2_bound: u64,
    pub add_ok: bool,
    pub mul_ok: bool,
    pub pow2_ok: bool,
    /// `mul_other` stayed zero.
    pub other_ok: bool,
}

impl BoundReport {
    pub fn pass(&self) -> bool {
        self.add_ok && self.mul_ok && self.pow2_ok && self.other_ok
    }

    pub const CSV_HEADER: &'static str = "l,kind,mul_root,mul_pow2,add_sub,add_bound,mul_bound,pass";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.ell,
            self.kind,
            self.counters.mul_root,
            self.counters.mul_pow2,
            self.counters.add_sub,
            self.add_bound,
            self.mul_bound,
            self.pass()
        )
    }
}

fn log_squared_slack(ell: usize) -> u64 {
    let m = ceil_log2(ell) as u64;
    LOG_SQUARED_SLACK * (m + 1) * (m + 1)
}

/// `sum_r (l_r / 2) log2 l_r` over the binary decomposition `l = sum_r l_r`.
pub fn binary_decomposition_cost(ell: usize) -> u64 {
    (0..usize::BITS)
        .filter(|b| (ell >> b) & 1 == 1)
        .map(|b| (b as u64) << b)
        .sum::<u64>()
        / 2
}

/// Forward add/sub bound `l floor(log2 l) + 2l`.
pub fn forward_add_bound(ell: usize) -> u64 {
    let l = ell as u64;
    l * floor_log2(ell) as u64 + 2 * l
}

/// Forward root-multiplication bound with declared slack.
pub fn forward_mul_bound(ell: usize) -> u64 {
    binary_decomposition_cost(ell) + 2 * ell as u64 + log_squared_slack(ell)
}

/// Inverse add/sub bound `l floor(log2 l) + 3l`.
pub fn inverse_add_bound(ell: usize) -> u64 {
    let l = ell as u64;
    l * floor_log2(ell) as u64 + 3 * l
}

/// Inverse root-multiplication bound with declared slack; the half-integer
/// main term is floored, which is exact for integer counts.
pub fn inverse_mul_bound(ell: usize) -> u64 {
    let l = ell as u64;
    l * floor_log2(ell) as u64 / 2 + 2 * l + log_squared_slack(ell)
}

/// Inverse bound on multiplications by powers of `2^-1`:
/// `2^ceil(log2 l) + 2 ceil(log2(ceil(log2 l) + 2)) + 4`.
pub fn inverse_pow2_bound(ell: usize) -> u64 {
    let m = ceil_log2(ell);
    (1u64 << m) + 2 * ceil_log2(m as usize + 2) as u64 + 4
}

/// FFT add/sub count `n log2 n` (exact).
pub fn fft_add_count(n: usize) -> u64 {
    n as u64 * floor_log2(n) as u64
}

/// FFT root-multiplication bound `(n/2) log2 n + n + 16`.
pub fn fft_mul_bound(n: usize) -> u64 {
    fft_add_count(n) / 2 + n as u64 + FFT_SLACK
}

/// Checks one tally against the bounds for `kind` at length `ell`
/// (for [`TransformKind::Fft`], `ell` is the power-of-two size `n`).
pub fn bound_check(ell: usize, counters: OpCounters, kind: TransformKind) -> BoundReport {
    let ell = ell.max(1);
    let (add_bound, mul_bound, pow2_bound, add_ok) = match kind {
        TransformKind::Forward => {
            let b = forward_add_bound(ell);
            (b, forward_mul_bound(ell), 0, counters.add_sub <= b)
        }
        TransformKind::Inverse => {
            let b = inverse_add_bound(ell);
            (
                b,
                inverse_mul_bound(ell),
                inverse_pow2_bound(ell),
                counters.add_sub <= b,
            )
        }
        TransformKind::Fft => {
            let b = fft_add_count(ell);
            (b, fft_mul_bound(ell), 0, counters.add_sub == b && ell.is_power_of_two())
        }
    };
    BoundReport {
        ell,
        kind,
        counters,
        add_bound,
        mul_bound,
        pow2_bound,
        add_ok,
        mul_ok: counters.mul_root <= mul_bound,
        pow2_ok: counters.mul_pow2 <= pow2_bound,
        other_ok: counters.mul_other == 0,
    }
}
