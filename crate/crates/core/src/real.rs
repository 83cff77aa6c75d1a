//! The geometric real number system.
//!
//! A geometric real is a strictly positive real `u`, stored canonically as
//! `ln u`. In the log domain every geometric operation becomes the matching
//! classical operation, which keeps values like `e^(k^m)` representable and
//! makes the classical oracle exact:
//!
//! ```text
//! u ⊕ v = uv            ->  ln u + ln v
//! u ⊖ v = u/v           ->  ln u - ln v
//! u ⊙ v = exp(ln u ln v) ->  ln u * ln v
//! u ⊘ v = u^(1/ln v)    ->  ln u / ln v     (v ≠ 1)
//! ```
//!
//! The additive identity ("geometric zero") is the number 1 and the
//! multiplicative identity is `e`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{GeoError, Result};
use crate::scalar::{default_log_tolerance, GeoFloat};

/// A geometric real number, stored as its natural logarithm.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct GeoReal<T> {
    log: T,
}

impl<T: GeoFloat> GeoReal<T> {
    /// Wraps a log-domain value that is known finite.
    #[inline]
    pub(crate) fn raw(log: T) -> Self {
        debug_assert!(log.is_finite(), "GeoReal log value must be finite");
        GeoReal { log }
    }

    /// Builds a geometric real from its log-domain representation.
    pub fn from_log(log: T) -> Result<Self> {
        if log.is_finite() {
            Ok(GeoReal { log })
        } else {
            Err(GeoError::Domain(format!("non-finite log value {log}")))
        }
    }

    /// Builds a geometric real from a positive real number.
    pub fn from_positive_real(u: T) -> Result<Self> {
        if u > T::zero() && u.is_finite() {
            Ok(GeoReal { log: u.ln() })
        } else {
            Err(GeoError::Domain(format!(
                "{u} is not a strictly positive finite real"
            )))
        }
    }

    /// The represented positive real `e^log`.
    ///
    /// Overflows to `inf`/`0` once `|log|` exceeds the float's exponent
    /// range; the log-domain representation itself never does.
    #[inline]
    pub fn to_positive_real(self) -> T {
        self.log.exp()
    }

    /// The stored `ln u`.
    #[inline]
    pub fn log_value(self) -> T {
        self.log
    }

    /// The geometric zero, i.e. the number 1.
    #[inline]
    pub fn geometric_zero() -> Self {
        GeoReal { log: T::zero() }
    }

    /// The geometric identity, i.e. the number `e`.
    #[inline]
    pub fn geometric_identity() -> Self {
        GeoReal { log: T::one() }
    }

    /// `e^t` for a raw exponent, the `e^n` shorthand used throughout.
    #[inline]
    pub fn exp_of(t: T) -> Result<Self> {
        Self::from_log(t)
    }

    /// Log-domain equality within an absolute tolerance.
    #[inline]
    pub fn approx_eq(self, other: Self, tol: T) -> bool {
        (self.log - other.log).abs() <= tol
    }

    /// Equality at the default tolerance (1e-12 in the log domain).
    #[inline]
    pub fn approx_eq_default(self, other: Self) -> bool {
        self.approx_eq(other, default_log_tolerance())
    }

    /// Whether this is the geometric zero at the given tolerance.
    #[inline]
    pub fn is_geometric_zero(self, tol: T) -> bool {
        self.log.abs() <= tol
    }
}

/// Geometric addition: `u ⊕ v = uv`.
#[inline]
pub fn gadd<T: GeoFloat>(u: GeoReal<T>, v: GeoReal<T>) -> GeoReal<T> {
    GeoReal::raw(u.log_value() + v.log_value())
}

/// Geometric subtraction: `u ⊖ v = u/v`.
#[inline]
pub fn gsub<T: GeoFloat>(u: GeoReal<T>, v: GeoReal<T>) -> GeoReal<T> {
    GeoReal::raw(u.log_value() - v.log_value())
}

/// Geometric multiplication: `u ⊙ v = exp(ln u · ln v)`.
#[inline]
pub fn gmul<T: GeoFloat>(u: GeoReal<T>, v: GeoReal<T>) -> GeoReal<T> {
    GeoReal::raw(u.log_value() * v.log_value())
}

/// Geometric division: `u ⊘ v = exp(ln u / ln v)`, undefined for `v = 1`.
pub fn gdiv<T: GeoFloat>(u: GeoReal<T>, v: GeoReal<T>) -> Result<GeoReal<T>> {
    if v.log_value() == T::zero() {
        return Err(GeoError::DivisionByGeometricZero);
    }
    let log = u.log_value() / v.log_value();
    if log.is_finite() {
        Ok(GeoReal::raw(log))
    } else {
        Err(GeoError::Domain(
            "geometric quotient overflows the log domain".into(),
        ))
    }
}

/// Geometric modulus: `|u|_G = exp|ln u| ≥ 1`.
#[inline]
pub fn gabs<T: GeoFloat>(u: GeoReal<T>) -> GeoReal<T> {
    GeoReal::raw(u.log_value().abs())
}

/// Geometric exponentiation: `u^(q_G) = exp((ln u)^q)`.
///
/// For `ln u < 0` only integer exponents are defined (the real power of a
/// negative base is otherwise undefined); those are evaluated with sign
/// arithmetic, which is what the `(⊖e)^(v_G)` factors of the difference
/// operator need.
pub fn gpow<T: GeoFloat>(u: GeoReal<T>, q: T) -> Result<GeoReal<T>> {
    let l = u.log_value();
    let log = if l >= T::zero() {
        l.powf(q)
    } else if q == q.trunc() && q.abs() <= crate::scalar::cast(i32::MAX as f64) {
        l.powi(q.to_i32().expect("integer exponent fits i32"))
    } else {
        return Err(GeoError::Domain(format!(
            "geometric power of {} (log {l}) with non-integer exponent {q}",
            u, // value < 1, log negative
        )));
    };
    if log.is_finite() {
        Ok(GeoReal::raw(log))
    } else {
        Err(GeoError::Domain(format!(
            "geometric power (log {l})^{q} leaves the log domain"
        )))
    }
}

/// Geometric sum of a finite list; the empty sum is the geometric zero 1.
pub fn gsum<T: GeoFloat>(xs: &[GeoReal<T>]) -> GeoReal<T> {
    xs.iter().copied().sum()
}

/// Geometric product of a finite list; the empty product is `e`.
pub fn gprod<T: GeoFloat>(xs: &[GeoReal<T>]) -> GeoReal<T> {
    xs.iter().copied().product()
}

/// The geometric metric `d_G(x, y) = |x ⊖ y|_G`.
#[inline]
pub fn gmetric<T: GeoFloat>(x: GeoReal<T>, y: GeoReal<T>) -> GeoReal<T> {
    gabs(gsub(x, y))
}

impl<T: GeoFloat> Add for GeoReal<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        gadd(self, rhs)
    }
}

impl<T: GeoFloat> Sub for GeoReal<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        gsub(self, rhs)
    }
}

impl<T: GeoFloat> Mul for GeoReal<T> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        gmul(self, rhs)
    }
}

/// Geometric negation `⊖u = 1 ⊖ u`, the reciprocal.
impl<T: GeoFloat> Neg for GeoReal<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        GeoReal::raw(-self.log_value())
    }
}

impl<T: GeoFloat> Sum for GeoReal<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GeoReal::geometric_zero(), gadd)
    }
}

impl<T: GeoFloat> Product for GeoReal<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GeoReal::geometric_identity(), gmul)
    }
}

impl<T: GeoFloat> fmt::Display for GeoReal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Values whose decimal form would overflow are shown as e-powers.
        if self.log.abs() <= crate::scalar::cast(700.0) {
            write!(f, "{}", self.to_positive_real())
        } else {
            write!(f, "e^{}", self.log)
        }
    }
}
