//! Prime-field arithmetic and the ring contract the transforms are written against.
//!
//! Elements are plain canonical residues ([`Fp`]) and carry no reference to
//! their modulus; every operation takes the field from context. The kernels in
//! this crate never touch `Fp` directly. They are generic over
//! [`TransformRing`], whose multiplication entry points are tagged by operand
//! class so that an instrumented wrapper can tally them.

use std::fmt;

use crate::error::{Error, Result};

/// A canonical residue `0 <= value < modulus`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp(pub(crate) u64);

impl Fp {
    #[inline]
    pub const fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Ring operations used by the transform kernels.
///
/// `mul_root` and `mul_pow2` exist so call sites can declare what they are
/// multiplying by (a power of the root of unity, or a power of `2^-1`). Plain
/// rings route both to `mul`; the counting wrapper in
/// [`crate::instrumentation`] records them separately.
pub trait TransformRing {
    type Elem: Copy + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Multiplication with no particular structure in either operand.
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;

    /// Multiplication of `a` by a power of the root of unity.
    #[inline]
    fn mul_root(&self, a: Self::Elem, root_power: Self::Elem) -> Self::Elem {
        self.mul(a, root_power)
    }

    /// Multiplication of `a` by a power of `2^-1`.
    #[inline]
    fn mul_pow2(&self, a: Self::Elem, half_power: Self::Elem) -> Self::Elem {
        self.mul(a, half_power)
    }

    /// `2a`, always realised as an addition.
    #[inline]
    fn double(&self, a: Self::Elem) -> Self::Elem {
        self.add(a, a)
    }

    #[inline]
    fn neg(&self, a: Self::Elem) -> Self::Elem {
        self.sub(self.zero(), a)
    }

    /// Whether `root^(2^(log_order-1)) == -1`, i.e. `root` has order exactly
    /// `2^log_order` (for `log_order >= 1`). Used for argument validation only;
    /// instrumented rings do not count it.
    fn has_two_power_order(&self, root: Self::Elem, log_order: u32) -> bool {
        if log_order == 0 {
            return root == self.one();
        }
        let mut x = root;
        for _ in 1..log_order {
            x = self.mul(x, x);
        }
        x == self.neg(self.one())
    }
}

/// Left-to-right square-and-multiply.
///
/// Uses `floor(log2 e)` squarings and `popcount(e) - 1` multiplications, so
/// never more than `2 floor(log2 e)` calls to `mul`. `e = 0` returns `one`
/// without multiplying, and no call ever has `one` as an operand.
pub fn square_and_multiply<E: Copy>(base: E, exp: u64, one: E, mut mul: impl FnMut(E, E) -> E) -> E {
    if exp == 0 {
        return one;
    }
    let top = 63 - exp.leading_zeros();
    let mut acc = base;
    for bit in (0..top).rev() {
        acc = mul(acc, acc);
        if (exp >> bit) & 1 == 1 {
            acc = mul(acc, base);
        }
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest modulus accepted: sums of two residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 63;

/// An odd prime together with a root of unity of maximal two-power order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeFieldParams {
    modulus: u64,
    two_adicity: u32,
    generator_root: u64,
}

impl PrimeFieldParams {
    /// Validates explicit parameters: `modulus` an odd prime, `two_adicity`
    /// equal to `ord2(modulus - 1)`, and `generator_root^(2^(s-1)) = -1`.
    pub fn new(modulus: u64, two_adicity: u32, generator_root: u64) -> Result<Self> {
        if modulus == 2 || modulus >= MAX_MODULUS || !is_prime(modulus) {
            return Err(Error::BadModulus(modulus));
        }
        let s = (modulus - 1).trailing_zeros();
        if two_adicity != s {
            return Err(Error::Parameter(format!(
                "two-adicity of {modulus} is {s}, not {two_adicity}"
            )));
        }
        if generator_root >= modulus {
            return Err(Error::NotReduced {
                value: generator_root,
                modulus,
            });
        }
        if pow_mod(generator_root, 1 << (s - 1), modulus) != modulus - 1 {
            return Err(Error::Parameter(format!(
                "{generator_root} does not have order 2^{s} modulo {modulus}"
            )));
        }
        Ok(Self {
            modulus,
            two_adicity,
            generator_root,
        })
    }

    /// Derives the two-power root from the smallest quadratic non-residue `c`
    /// as `c^((p-1)/2^s)`.
    pub fn for_modulus(modulus: u64) -> Result<Self> {
        if modulus == 2 || modulus >= MAX_MODULUS || !is_prime(modulus) {
            return Err(Error::BadModulus(modulus));
        }
        let s = (modulus - 1).trailing_zeros();
        let half = (modulus - 1) / 2;
        let non_residue = (2..modulus)
            .find(|&c| pow_mod(c, half, modulus) == modulus - 1)
            .expect("odd primes have quadratic non-residues");
        let generator_root = pow_mod(non_residue, (modulus - 1) >> s, modulus);
        Self::new(modulus, s, generator_root)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn two_adicity(&self) -> u32 {
        self.two_adicity
    }

    pub fn generator_root(&self) -> Fp {
        Fp(self.generator_root)
    }
}

/// Arithmetic modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    params: PrimeFieldParams,
}

impl PrimeField {
    /// `998244353 = 119 * 2^23 + 1`, the default field.
    pub const DEFAULT_MODULUS: u64 = 998_244_353;

    pub fn new(modulus: u64) -> Result<Self> {
        Ok(Self {
            params: PrimeFieldParams::for_modulus(modulus)?,
        })
    }

    pub fn from_params(params: PrimeFieldParams) -> Self {
        Self { params }
    }

    pub fn default_field() -> Self {
        Self::new(Self::DEFAULT_MODULUS).expect("998244353 is prime")
    }

    pub fn params(&self) -> &PrimeFieldParams {
        &self.params
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.params.modulus
    }

    pub fn two_adicity(&self) -> u32 {
        self.params.two_adicity
    }

    /// Accepts `value` only if it is already a reduced residue.
    pub fn element(&self, value: u64) -> Result<Fp> {
        if value < self.modulus() {
            Ok(Fp(value))
        } else {
            Err(Error::NotReduced {
                value,
                modulus: self.modulus(),
            })
        }
    }

    #[inline]
    pub fn reduce(&self, value: u64) -> Fp {
        Fp(value % self.modulus())
    }

    /// Maps a signed integer to its residue.
    pub fn from_i64(&self, value: i64) -> Fp {
        Fp(value.rem_euclid(self.modulus() as i64) as u64)
    }

    #[inline]
    fn check(&self, x: Fp) {
        debug_assert!(x.0 < self.modulus(), "{} is not a residue mod {}", x.0, self.modulus());
    }

    #[inline]
    pub fn add(&self, x: Fp, y: Fp) -> Fp {
        self.check(x);
        self.check(y);
        let s = x.0 + y.0;
        Fp(if s >= self.modulus() { s - self.modulus() } else { s })
    }

    #[inline]
    pub fn sub(&self, x: Fp, y: Fp) -> Fp {
        self.check(x);
        self.check(y);
        Fp(if x.0 >= y.0 {
            x.0 - y.0
        } else {
            x.0 + self.modulus() - y.0
        })
    }

    #[inline]
    pub fn mul(&self, x: Fp, y: Fp) -> Fp {
        self.check(x);
        self.check(y);
        Fp(mul_mod(x.0, y.0, self.modulus()))
    }

    #[inline]
    pub fn neg(&self, x: Fp) -> Fp {
        self.check(x);
        Fp(if x.0 == 0 { 0 } else { self.modulus() - x.0 })
    }

    #[inline]
    pub fn double(&self, x: Fp) -> Fp {
        self.add(x, x)
    }

    pub fn pow(&self, x: Fp, e: u64) -> Fp {
        square_and_multiply(x, e, Fp(1), |a, b| self.mul(a, b))
    }

    /// Fermat inverse `x^(p-2)`.
    pub fn inverse(&self, x: Fp) -> Result<Fp> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, self.modulus() - 2))
    }

    /// The element `generator_root^(2^(s-m))` of order exactly `2^m`.
    pub fn root_of_order(&self, m: u32) -> Result<Fp> {
        root_of_order(&self.params, m)
    }

    /// `2^-1`.
    pub fn half(&self) -> Fp {
        Fp(self.modulus().div_ceil(2))
    }
}

/// The element of multiplicative order exactly `2^m` derived from `params`.
pub fn root_of_order(params: &PrimeFieldParams, m: u32) -> Result<Fp> {
    if m > params.two_adicity {
        return Err(Error::OrderUnavailable {
            requested: m,
            available: params.two_adicity,
        });
    }
    let mut root = params.generator_root;
    for _ in m..params.two_adicity {
        root = mul_mod(root, root, params.modulus);
    }
    Ok(Fp(root))
}

impl TransformRing for PrimeField {
    type Elem = Fp;

    #[inline]
    fn zero(&self) -> Fp {
        Fp(0)
    }

    #[inline]
    fn one(&self) -> Fp {
        Fp(1)
    }

    #[inline]
    fn add(&self, a: Fp, b: Fp) -> Fp {
        PrimeField::add(self, a, b)
    }

    #[inline]
    fn sub(&self, a: Fp, b: Fp) -> Fp {
        PrimeField::sub(self, a, b)
    }

    #[inline]
    fn mul(&self, a: Fp, b: Fp) -> Fp {
        PrimeField::mul(self, a, b)
    }

    #[inline]
    fn neg(&self, a: Fp) -> Fp {
        PrimeField::neg(self, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f17() -> PrimeField {
        PrimeField::new(17).unwrap()
    }

    #[test]
    fn small_field_examples() {
        let f = f17();
        assert_eq!(f.add(Fp(9), Fp(13)), Fp(5));
        assert_eq!(f.mul(Fp(13), Fp(13)), Fp(16));
        assert_eq!(f.neg(Fp(0)), Fp(0));
        assert_eq!(f.pow(Fp(3), 8), Fp(16));
        assert_eq!(f.pow(Fp(7), 0), Fp(1));
        assert_eq!(f.pow(Fp(7), 1), Fp(7));
        assert_eq!(f.inverse(Fp(2)).unwrap(), Fp(9));
        assert_eq!(f.inverse(Fp(1)).unwrap(), Fp(1));
        assert_eq!(f.inverse(Fp(16)).unwrap(), Fp(16));
        assert_eq!(f.inverse(Fp(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn params_for_standard_primes() {
        let p = PrimeFieldParams::for_modulus(17).unwrap();
        assert_eq!((p.two_adicity(), p.generator_root()), (4, Fp(3)));

        let p = PrimeFieldParams::for_modulus(998_244_353).unwrap();
        assert_eq!(p.two_adicity(), 23);
        assert_eq!(p.generator_root(), Fp(pow_mod(3, 119, 998_244_353)));
    }

    #[test]
    fn rejects_bad_moduli() {
        for m in [0, 1, 2, 4, 15, 561, 998_244_351] {
            assert_eq!(PrimeField::new(m), Err(Error::BadModulus(m)), "{m}");
        }
        assert!(PrimeFieldParams::new(17, 4, 2).is_err());
        assert!(PrimeFieldParams::new(17, 3, 3).is_err());
        assert!(PrimeFieldParams::new(17, 4, 3).is_ok());
    }

    #[test]
    fn element_must_be_reduced() {
        let f = f17();
        assert_eq!(f.element(16), Ok(Fp(16)));
        assert_eq!(f.element(17), Err(Error::NotReduced { value: 17, modulus: 17 }));
        assert_eq!(f.from_i64(-1), Fp(16));
    }

    #[test]
    fn roots_of_two_power_order() {
        let f = f17();
        assert_eq!(f.root_of_order(4).unwrap(), Fp(3));
        assert_eq!(f.root_of_order(2).unwrap(), Fp(13));
        assert_eq!(f.root_of_order(0).unwrap(), Fp(1));
        assert_eq!(
            f.root_of_order(5),
            Err(Error::OrderUnavailable {
                requested: 5,
                available: 4
            })
        );

        let big = PrimeField::default_field();
        for m in 0..=23 {
            let psi = big.root_of_order(m).unwrap();
            assert_eq!(big.pow(psi, 1 << m), Fp(1));
            if m >= 1 {
                assert_eq!(big.pow(psi, 1 << (m - 1)), Fp(big.modulus() - 1));
                assert!(TransformRing::has_two_power_order(&big, psi, m));
            }
        }
    }

    #[test]
    fn pow_matches_iterated_mul_and_cost() {
        let f = PrimeField::default_field();
        let x = Fp(123_456_789);
        let mut expected = Fp(1);
        for e in 0..=32u64 {
            assert_eq!(f.pow(x, e), expected, "e = {e}");
            let mut calls = 0u64;
            square_and_multiply(x, e, Fp(1), |a, b| {
                calls += 1;
                f.mul(a, b)
            });
            let floor_log = 63 - e.max(1).leading_zeros() as u64;
            assert!(calls <= 2 * floor_log + 1);
            expected = f.mul(expected, x);
        }
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "{n}");
        }
        assert!(is_prime(998_244_353));
        assert!(is_prime(0xffff_ffff_0000_0001));
        assert!(!is_prime(3_215_031_751));
    }

    proptest! {
        #[test]
        fn field_identities(a in 0u64..998_244_353, b in 1u64..998_244_353) {
            let f = PrimeField::default_field();
            let (x, y) = (Fp(a), Fp(b));
            prop_assert_eq!(f.add(x, f.neg(x)), Fp(0));
            prop_assert_eq!(f.mul(x, Fp(1)), x);
            prop_assert_eq!(f.double(x), f.add(x, x));
            prop_assert_eq!(f.mul(y, f.inverse(y).unwrap()), Fp(1));
            prop_assert_eq!(f.sub(f.add(x, y), y), x);
            prop_assert_eq!(f.mul(x, y).value(), ((a as u128 * b as u128) % 998_244_353) as u64);
        }
    }
}
