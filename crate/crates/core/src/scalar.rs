//! Scalar abstraction for the log-domain arithmetic.
//!
//! Every quantity in this crate is ultimately a classical real carried in the
//! log domain, so the whole library is generic over the underlying float.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar usable as the log-domain carrier type.
///
/// Blanket-implemented for anything float-like; in practice `f32` and `f64`.
pub trait GeoFloat: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

impl<T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static> GeoFloat for T {}

/// Shorthand for pulling an `f64` constant into the generic scalar type.
#[inline]
pub(crate) fn cast<T: GeoFloat>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

/// Index/count conversion into the scalar type.
#[inline]
pub(crate) fn cast_usize<T: GeoFloat>(n: usize) -> T {
    T::from_usize(n).expect("index representable in scalar type")
}

/// Default absolute tolerance for log-domain equality of geometric reals.
#[inline]
pub fn default_log_tolerance<T: GeoFloat>() -> T {
    cast(1e-12)
}
