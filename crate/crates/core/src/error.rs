use thiserror::Error;

/// Errors raised by the arithmetic, transform and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime below 2^63")]
    BadModulus(u64),

    #[error("residue {value} is not reduced modulo {modulus}")]
    NotReduced { value: u64, modulus: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("no root of unity of order 2^{requested}: the field supports at most 2^{available}")]
    OrderUnavailable { requested: u32, available: u32 },

    #[error("index {index} out of range for {bits}-bit reversal")]
    IndexRange { index: usize, bits: u32 },

    #[error("buffer has length {actual}, expected {expected}")]
    Length { expected: usize, actual: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("transform requires 2 to be invertible in the ring")]
    UnsupportedRing,

    #[error("transform length {ell} exceeds root capacity 2^{two_adicity}")]
    Capacity { ell: usize, two_adicity: u32 },

    #[error("evaluation matrix is singular")]
    Singular,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
