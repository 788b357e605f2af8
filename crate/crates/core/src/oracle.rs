//! Brute-force reference implementations.
//!
//! Nothing here calls into the fast kernels, the twiddle machinery or the
//! bit-reversal helpers: powers are built by repeated multiplication and
//! polynomials are evaluated by Horner's rule. All functions are pure.

use crate::error::{Error, Result};
use crate::ring::{Fp, PrimeField};

fn reversed(i: usize, bits: u32) -> usize {
    let mut out = 0;
    let mut rest = i;
    for _ in 0..bits {
        out = (out << 1) | (rest & 1);
        rest >>= 1;
    }
    out
}

fn horner(field: &PrimeField, coeffs: &[Fp], x: Fp) -> Fp {
    coeffs
        .iter()
        .rev()
        .fold(Fp::default(), |acc, &c| field.add(field.mul(acc, x), c))
}

// 1, w, w^2, ..., w^(count-1)
fn powers(field: &PrimeField, w: Fp, count: usize) -> Vec<Fp> {
    let mut out = Vec::with_capacity(count);
    let mut x = field.reduce(1);
    for _ in 0..count {
        out.push(x);
        x = field.mul(x, w);
    }
    out
}

// order exactly 2^bits, checked through the power list
fn check_order(field: &PrimeField, w: Fp, bits: u32) -> Result<()> {
    let n = 1usize << bits;
    let pw = powers(field, w, n + 1);
    let ok = if bits == 0 {
        w == field.reduce(1)
    } else {
        pw[n / 2] == field.neg(field.reduce(1)) && pw[n] == field.reduce(1)
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Parameter(format!("root does not have order 2^{bits}")))
    }
}

/// `a_hat_i = sum_j a_j omega^(ij)` for a power-of-two length, natural order.
pub fn naive_dft(field: &PrimeField, omega: Fp, a: &[Fp]) -> Result<Vec<Fp>> {
    let n = a.len();
    if !n.is_power_of_two() {
        return Err(Error::Parameter(format!("DFT length {n} is not a power of two")));
    }
    check_order(field, omega, n.trailing_zeros())?;
    Ok(powers(field, omega, n)
        .into_iter()
        .map(|x| horner(field, a, x))
        .collect())
}

/// Evaluates the polynomial with coefficients `a` at `psi^[i]_m` for `i < ell`,
/// where `m = ceil(log2 ell)` and `psi` has order `2^m`.
pub fn naive_tft(field: &PrimeField, psi: Fp, ell: usize, a: &[Fp]) -> Result<Vec<Fp>> {
    let points = tft_points(field, psi, ell)?;
    if a.len() != ell {
        return Err(Error::Length {
            expected: ell,
            actual: a.len(),
        });
    }
    Ok(points.into_iter().map(|x| horner(field, a, x)).collect())
}

fn tft_points(field: &PrimeField, psi: Fp, ell: usize) -> Result<Vec<Fp>> {
    if ell == 0 {
        return Err(Error::Parameter("transform length must be at least 1".into()));
    }
    let mut bits = 0;
    while (1usize << bits) < ell {
        bits += 1;
    }
    check_order(field, psi, bits)?;
    let pw = powers(field, psi, 1 << bits);
    Ok((0..ell).map(|i| pw[reversed(i, bits)]).collect())
}

/// Row-major square-or-rectangular matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Fp>,
}

impl DenseMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fp) -> Self {
        let entries = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fp {
        self.entries[r * self.cols + c]
    }

    /// Solves `self * x = rhs` for square `self` by Gaussian elimination,
    /// pivoting on the first nonzero entry of each column.
    pub fn solve(&self, field: &PrimeField, rhs: &[Fp]) -> Result<Vec<Fp>> {
        let n = self.rows;
        if self.cols != n {
            return Err(Error::Parameter(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        if rhs.len() != n {
            return Err(Error::Length {
                expected: n,
                actual: rhs.len(),
            });
        }
        // augmented copy, width n + 1
        let w = n + 1;
        let mut aug: Vec<Fp> = Vec::with_capacity(n * w);
        for (row, &b) in self.entries.chunks(n).zip(rhs) {
            aug.extend_from_slice(row);
            aug.push(b);
        }
        let zero = Fp::default();
        for col in 0..n {
            let pivot = (col..n).find(|&r| aug[r * w + col] != zero).ok_or(Error::Singular)?;
            if pivot != col {
                for c in 0..w {
                    aug.swap(pivot * w + c, col * w + c);
                }
            }
            let inv = field.inverse(aug[col * w + col])?;
            for c in col..w {
                aug[col * w + c] = field.mul(aug[col * w + c], inv);
            }
            for r in 0..n {
                let factor = aug[r * w + col];
                if r == col || factor == zero {
                    continue;
                }
                for c in col..w {
                    let sub = field.mul(factor, aug[col * w + c]);
                    aug[r * w + c] = field.sub(aug[r * w + c], sub);
                }
            }
        }
        Ok((0..n).map(|r| aug[r * w + n]).collect())
    }
}

/// Recovers coefficients from truncated-transform values by solving the
/// `ell x ell` evaluation system `M_ij = (psi^[i]_m)^j`.
pub fn naive_itft_solve(field: &PrimeField, psi: Fp, ell: usize, values: &[Fp]) -> Result<Vec<Fp>> {
    let points = tft_points(field, psi, ell)?;
    let rows: Vec<Vec<Fp>> = points.iter().map(|&x| powers(field, x, ell)).collect();
    DenseMatrix::from_fn(ell, ell, |r, c| rows[r][c]).solve(field, values)
}

/// Schoolbook product, `f.len() + g.len() - 1` coefficients.
pub fn naive_polymul(field: &PrimeField, f: &[Fp], g: &[Fp]) -> Result<Vec<Fp>> {
    if f.is_empty() || g.is_empty() {
        return Err(Error::Parameter("polynomial factors must be nonempty".into()));
    }
    let mut out = vec![Fp::default(); f.len() + g.len() - 1];
    for (i, &x) in f.iter().enumerate() {
        for (j, &y) in g.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    Ok(out)
}
