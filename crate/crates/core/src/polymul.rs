//! Polynomial multiplication through the truncated transform.
//!
//! A product of length `l` is evaluated at exactly `l` points, so the cost
//! grows smoothly with `l` instead of doubling at each power of two the way a
//! zero-padded FFT multiplier does.

use crate::bits::ceil_log2;
use crate::error::{Error, Result};
use crate::fft::fft_in_place;
use crate::instrumentation::{CountingRing, OpCounters};
use crate::itft::itft_in_place;
use crate::ring::{Fp, PrimeField, TransformRing};
use crate::tft::{tft_in_place, TransformPlan};

/// `f * g` with exactly `f.len() + g.len() - 1` coefficients.
pub fn tft_polymul(field: &PrimeField, f: &[Fp], g: &[Fp]) -> Result<Vec<Fp>> {
    let ell = product_len(f, g)?;
    let plan = TransformPlan::new(field, ell)?;
    tft_polymul_with(field, &plan, f, g)
}

/// As [`tft_polymul`], over any ring and with a caller-supplied plan whose
/// length must be `f.len() + g.len() - 1`.
pub fn tft_polymul_with<R: TransformRing>(
    ring: &R,
    plan: &TransformPlan<R::Elem>,
    f: &[R::Elem],
    g: &[R::Elem],
) -> Result<Vec<R::Elem>> {
    let ell = product_len(f, g)?;
    if plan.ell() != ell {
        return Err(Error::Length {
            expected: ell,
            actual: plan.ell(),
        });
    }
    let mut a = f.to_vec();
    a.resize(ell, ring.zero());
    let mut b = g.to_vec();
    b.resize(ell, ring.zero());
    tft_in_place(ring, plan, &mut a[..])?;
    tft_in_place(ring, plan, &mut b[..])?;
    for (x, &y) in a.iter_mut().zip(&b) {
        *x = ring.mul(*x, y);
    }
    itft_in_place(ring, plan, &mut a[..])?;
    Ok(a)
}

fn product_len<E>(f: &[E], g: &[E]) -> Result<usize> {
    if f.is_empty() || g.is_empty() {
        return Err(Error::Parameter("polynomial factors must be nonempty".into()));
    }
    Ok(f.len() + g.len() - 1)
}

/// Operation counts of one TFT multiplication with product length `ell`.
pub fn tft_polymul_counts(field: &PrimeField, ell: usize) -> Result<OpCounters> {
    let ring = CountingRing::new(*field);
    let plan = TransformPlan::new(field, ell)?;
    let split = ell.div_ceil(2);
    let f: Vec<Fp> = (0..split as u64).map(|i| field.reduce(i + 1)).collect();
    let g: Vec<Fp> = (0..(ell + 1 - split) as u64).map(|i| field.reduce(2 * i + 3)).collect();
    tft_polymul_with(&ring, &plan, &f, &g)?;
    Ok(ring.counters())
}

/// Operation counts of the zero-padded FFT multiplier for product length
/// `ell`: two forward FFTs and one inverse FFT of size `2^ceil(log2 ell)`,
/// the pointwise products, and the final scaling by `1/n`.
pub fn padded_fft_polymul_counts(field: &PrimeField, ell: usize) -> Result<OpCounters> {
    if ell == 0 {
        return Err(Error::Parameter("product length must be at least 1".into()));
    }
    let log_n = ceil_log2(ell);
    let n = 1usize << log_n;
    let omega = field.root_of_order(log_n)?;
    let omega_inv = field.inverse(omega)?;
    let ring = CountingRing::new(*field);
    let mut a: Vec<Fp> = (0..n as u64).map(|i| field.reduce(i + 1)).collect();
    let mut b = a.clone();
    fft_in_place(&ring, log_n, omega, &mut a)?;
    fft_in_place(&ring, log_n, omega, &mut b)?;
    for (x, &y) in a.iter_mut().zip(&b) {
        *x = ring.mul(*x, y);
    }
    // The inverse consumes bit-reversed input; the permutation costs no
    // ring operations and is left out.
    fft_in_place(&ring, log_n, omega_inv, &mut a)?;
    let scale = field.inverse(field.reduce(n as u64))?;
    if n > 1 {
        for x in &mut a {
            *x = ring.mul_pow2(*x, scale);
        }
    }
    Ok(ring.counters())
}

/// Total-operation curves for a range of product lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    /// `(ell, tft_total, padded_fft_total)` per product length.
    pub rows: Vec<(usize, u64, u64)>,
}

impl SmoothnessReport {
    /// Largest ratio `total(ell + 1) / total(ell)` along the TFT curve.
    pub fn max_tft_jump(&self) -> f64 {
        max_jump(self.rows.iter().map(|r| r.1))
    }

    /// Same for the zero-padded FFT curve.
    pub fn max_fft_jump(&self) -> f64 {
        max_jump(self.rows.iter().map(|r| r.2))
    }
}

fn max_jump(totals: impl Iterator<Item = u64>) -> f64 {
    let totals: Vec<u64> = totals.collect();
    totals
        .windows(2)
        .map(|w| w[1] as f64 / w[0].max(1) as f64)
        .fold(1.0, f64::max)
}

pub fn smoothness_report(field: &PrimeField, lengths: std::ops::RangeInclusive<usize>) -> Result<SmoothnessReport> {
    let rows = lengths
        .map(|ell| {
            let tft = tft_polymul_counts(field, ell)?.total();
            let fft = padded_fft_polymul_counts(field, ell)?.total();
            Ok((ell, tft, fft))
        })
        .collect::<Result<_>>()?;
    Ok(SmoothnessReport { rows })
}
