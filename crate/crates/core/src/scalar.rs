//! Floating-point scalar abstraction for the numeric core.
//!
//! The eigensolver, the bound formulas, and the complex verifier are generic
//! over a real scalar type so the same code runs in `f32` and `f64`. The
//! crate root exports `f64` aliases (`Matrix64`, `Spectrum64`, …), which is
//! what the harness and CLI use; `f32` is available for callers who want a
//! cheaper instantiation and are willing to widen the tolerances.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar the numeric core is generic over.
///
/// A blanket impl covers every type with the listed capabilities; in practice
/// that is `f32` and `f64`.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` constant (tolerances, grid factors, literals) into
    /// `Self`. Panics only if the target type cannot represent `f64` values
    /// at all, which no implementor of this trait does.
    #[inline]
    fn cast(x: f64) -> Self {
        Self::from_f64(x).expect("scalar type must accept f64 constants")
    }

    /// Converts a `usize` (dimensions, counts) into `Self`.
    #[inline]
    fn cast_usize(x: usize) -> Self {
        Self::from_usize(x).unwrap_or_else(|| Self::cast(x as f64))
    }
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
}
