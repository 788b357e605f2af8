//! Twiddle factors without tables.
//!
//! Throughout, `psi` has order `2^m` and the twiddle for butterfly block `i`
//! is `psi^[2i]_m`. [`PairStream`] produces every such pair for `1 <= i < q`
//! as runs of geometric progressions, at one multiplication per pair plus
//! `O(m)` setup. [`TwiddleContext`] computes single twiddles by
//! square-and-multiply.

use crate::bits::{floor_log2, reverse_bits};
use crate::error::{Error, Result};
use crate::ring::{square_and_multiply, TransformRing};

/// Streams `(i, psi^[2i]_m)` for `i` in `1..q`.
///
/// Indices come out block by block: `q` is split into descending powers of
/// two, and inside each block of size `2^b` the offsets appear in `b`-bit
/// reversed order, which makes consecutive twiddles differ by a constant
/// ratio. All multiplications go through [`TransformRing::mul_root`].
pub struct PairStream<'r, R: TransformRing> {
    ring: &'r R,
    q: usize,
    // log size of the current block and its offset
    block_bits: u32,
    offset: usize,
    // next position within the current block, 1..2^block_bits
    pos: usize,
    tau: R::Elem,
    tau_is_one: bool,
    lambda: R::Elem,
    mu: R::Elem,
    theta: R::Elem,
    theta_is_one: bool,
    done: bool,
}

impl<'r, R: TransformRing> PairStream<'r, R> {
    pub fn new(ring: &'r R, m: u32, psi: R::Elem, q: usize) -> Result<Self> {
        if m == 0 || m >= usize::BITS || q == 0 || q > 1usize << (m - 1) {
            return Err(Error::Parameter(format!(
                "pair bound q = {q} outside 1..=2^(m-1) for m = {m}"
            )));
        }
        let one = ring.one();
        let mut stream = Self {
            ring,
            q,
            block_bits: 0,
            offset: 0,
            pos: 1,
            tau: one,
            tau_is_one: true,
            lambda: one,
            mu: one,
            theta: one,
            theta_is_one: true,
            done: q == 1,
        };
        if stream.done {
            return Ok(stream);
        }
        let i = floor_log2(q);
        let e = (m - 1 - i).min(1);
        let mut lambda = psi;
        for _ in 0..m - 1 - i - e {
            lambda = ring.mul_root(lambda, lambda);
        }
        let mut mu = lambda;
        for _ in 0..e {
            mu = ring.mul_root(mu, mu);
        }
        stream.block_bits = i;
        stream.lambda = lambda;
        stream.mu = mu;
        Ok(stream)
    }
}

impl<R: TransformRing> Iterator for PairStream<'_, R> {
    type Item = (usize, R::Elem);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let ring = self.ring;
        let block = 1usize << self.block_bits;
        if self.pos < block {
            self.theta = if self.theta_is_one {
                self.mu
            } else {
                ring.mul_root(self.theta, self.mu)
            };
            self.theta_is_one = false;
            let index = self.offset + reverse_bits(self.pos, self.block_bits);
            self.pos += 1;
            return Some((index, self.theta));
        }

        self.offset += block;
        if self.q <= self.offset {
            self.done = true;
            return None;
        }
        let prev_bits = self.block_bits;
        self.block_bits = floor_log2(self.q - self.offset);
        self.tau = if self.tau_is_one {
            self.lambda
        } else {
            ring.mul_root(self.tau, self.lambda)
        };
        self.tau_is_one = false;
        for _ in self.block_bits..prev_bits {
            self.lambda = ring.mul_root(self.lambda, self.lambda);
        }
        // mu is only consumed by blocks of size > 1
        if self.block_bits > 0 {
            self.mu = ring.mul_root(self.lambda, self.lambda);
        }
        self.theta = self.tau;
        self.theta_is_one = false;
        self.pos = 1;
        Some((self.offset, self.theta))
    }
}

/// One-off twiddles `psi^(±[2 q_k]_m)` for the boundary blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwiddleContext<E> {
    m: u32,
    psi: E,
}

impl<E: Copy> TwiddleContext<E> {
    pub fn new<R: TransformRing<Elem = E>>(ring: &R, m: u32, psi: E) -> Result<Self> {
        if m >= u64::BITS || !ring.has_two_power_order(psi, m) {
            return Err(Error::Parameter(format!("root does not have order 2^{m}")));
        }
        Ok(Self { m, psi })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn psi(&self) -> E {
        self.psi
    }

    // 2^k [qk]_{m-k-1}, the exponent of psi giving omega^[2qk]_p
    fn exponent(&self, k: u32, qk: usize) -> Result<u64> {
        if k + 1 > self.m || qk >> (self.m - k - 1) != 0 {
            return Err(Error::Parameter(format!(
                "twiddle index (k = {k}, q = {qk}) out of range for m = {}",
                self.m
            )));
        }
        Ok((reverse_bits(qk, self.m - k - 1) as u64) << k)
    }

    /// `psi^(2^k [qk]_{m-k-1})`, which equals `omega^[2 qk]_p`.
    pub fn forward<R: TransformRing<Elem = E>>(&self, ring: &R, k: u32, qk: usize) -> Result<E> {
        let e = self.exponent(k, qk)?;
        Ok(square_and_multiply(self.psi, e, ring.one(), |a, b| ring.mul_root(a, b)))
    }

    /// `psi^(2^k (2^(m-k) - [qk]_{m-k-1}))`, the inverse of [`Self::forward`].
    pub fn inverse<R: TransformRing<Elem = E>>(&self, ring: &R, k: u32, qk: usize) -> Result<E> {
        let e = self.exponent(k, qk)?;
        let order = 1u64 << self.m;
        let e = (order - e) % order;
        Ok(square_and_multiply(self.psi, e, ring.one(), |a, b| ring.mul_root(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instrumentation::CountingRing;
    use crate::ring::{Fp, PrimeField};

    #[test]
    fn stream_example_mod_17() {
        let f = PrimeField::new(17).unwrap();
        let pairs: Vec<_> = PairStream::new(&f, 3, Fp(9), 4).unwrap().collect();
        assert_eq!(pairs, [(2, Fp(9)), (1, Fp(13)), (3, Fp(15))]);

        assert_eq!(PairStream::new(&f, 3, Fp(9), 1).unwrap().count(), 0);
        assert_eq!(PairStream::new(&f, 1, Fp(16), 1).unwrap().count(), 0);
    }

    #[test]
    fn stream_rejects_bad_bounds() {
        let f = PrimeField::new(17).unwrap();
        assert!(PairStream::new(&f, 3, Fp(9), 0).is_err());
        assert!(PairStream::new(&f, 3, Fp(9), 5).is_err());
        assert!(PairStream::new(&f, 0, Fp(1), 1).is_err());
    }

    #[test]
    fn stream_stays_exhausted() {
        let f = PrimeField::new(17).unwrap();
        let mut s = PairStream::new(&f, 3, Fp(9), 3).unwrap();
        assert_eq!(s.by_ref().count(), 2);
        assert_eq!(s.next(), None);
        assert_eq!(s.next(), None);
    }

    #[test]
    fn stream_never_multiplies_by_one() {
        let f = PrimeField::default_field();
        for m in 1..=9 {
            let psi = f.root_of_order(m).unwrap();
            for q in 1..=1usize << (m - 1) {
                let ring = CountingRing::new(f);
                let _ = PairStream::new(&ring, m, psi, q).unwrap().count();
                assert_eq!(ring.counters().mul_by_one, 0, "m = {m}, q = {q}");
            }
        }
    }

    #[test]
    fn single_twiddle_examples() {
        let f = PrimeField::new(17).unwrap();
        let ctx = TwiddleContext::new(&f, 2, Fp(13)).unwrap();
        assert_eq!(ctx.forward(&f, 0, 0).unwrap(), Fp(1));
        assert_eq!(ctx.forward(&f, 0, 1).unwrap(), Fp(13));
        assert_eq!(ctx.inverse(&f, 0, 0).unwrap(), Fp(1));
        assert_eq!(ctx.inverse(&f, 0, 1).unwrap(), Fp(4));

        let ctx = TwiddleContext::new(&f, 3, Fp(9)).unwrap();
        assert_eq!(ctx.forward(&f, 1, 1).unwrap(), Fp(13));
        assert!(ctx.forward(&f, 1, 2).is_err());
        assert!(ctx.forward(&f, 3, 0).is_err());
        assert!(TwiddleContext::new(&f, 3, Fp(13)).is_err());
    }

    #[test]
    fn forward_times_inverse_is_one() {
        let f = PrimeField::default_field();
        for m in 1..=10 {
            let ctx = TwiddleContext::new(&f, m, f.root_of_order(m).unwrap()).unwrap();
            for k in 0..m {
                for qk in 0..1usize << (m - k - 1) {
                    let a = ctx.forward(&f, k, qk).unwrap();
                    let b = ctx.inverse(&f, k, qk).unwrap();
                    assert_eq!(f.mul(a, b), Fp(1), "m = {m}, k = {k}, qk = {qk}");
                }
            }
        }
    }
}
