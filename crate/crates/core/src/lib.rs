//! In-place truncated Fourier transform (TFT) and inverse over prime fields.
//!
//! The forward transform evaluates a polynomial with `l` coefficients at the
//! `l` points `psi^[i]_m` (bit-reversed powers of a root of unity of order
//! `2^m >= l`) and overwrites the coefficient array with the values, using
//! only a constant number of extra ring elements. The inverse recovers the
//! coefficients the same way.
//!
//! ```
//! use tft_core::{itft_in_place, tft_in_place, PrimeField, TransformPlan};
//!
//! let field = PrimeField::new(17).unwrap();
//! let plan = TransformPlan::new(&field, 3).unwrap();
//! let mut buf: Vec<_> = [1, 2, 3].iter().map(|&x| field.reduce(x)).collect();
//!
//! tft_in_place(&field, &plan, &mut buf[..]).unwrap();
//! assert_eq!(buf.iter().map(|x| x.value()).collect::<Vec<_>>(), [6, 2, 7]);
//!
//! itft_in_place(&field, &plan, &mut buf[..]).unwrap();
//! assert_eq!(buf.iter().map(|x| x.value()).collect::<Vec<_>>(), [1, 2, 3]);
//! ```

pub mod bits;
mod butterfly;
pub mod error;
pub mod fft;
pub mod instrumentation;
pub mod itft;
pub mod oracle;
pub mod polymul;
pub mod ring;
pub mod slots;
pub mod text;
pub mod tft;
pub mod twiddle;

pub use error::{Error, Result};
pub use fft::{dft_natural_order, fft_in_place};
pub use instrumentation::{bound_check, AuditBuffer, BoundReport, CountingRing, OpCounters, TransformKind};
pub use itft::itft_in_place;
pub use polymul::tft_polymul;
pub use ring::{Fp, PrimeField, PrimeFieldParams, TransformRing};
pub use slots::Slots;
pub use tft::{tft_in_place, TransformPlan};
pub use twiddle::{PairStream, TwiddleContext};
