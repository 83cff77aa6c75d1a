//! Bigeometric differentiation.
//!
//! The bigeometric derivative of `f` at `a` is
//! `lim_{x→a} [f(x)/f(a)]^{1/(ln x − ln a)}`; whenever the classical
//! derivative exists it equals `e^(a f'(a) / f(a))`. Numerically we work in
//! log–log coordinates: with `g(t) = ln f(e^t)` the derivative is exactly
//! `e^(g'(ln a))`, so a central difference on `g` is symmetric and
//! second-order accurate.

use crate::error::{GeoError, Result};
use crate::real::GeoReal;
use crate::scalar::{cast, GeoFloat};

type DynFn<T> = Box<dyn Fn(T) -> T + Send + Sync>;

/// A positive-valued real function, optionally with its classical derivative.
pub struct RealFunction<T> {
    eval: DynFn<T>,
    derivative: Option<DynFn<T>>,
    name: Option<&'static str>,
}

impl<T: GeoFloat> RealFunction<T> {
    pub fn new(eval: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        RealFunction {
            eval: Box::new(eval),
            derivative: None,
            name: None,
        }
    }

    pub fn with_derivative(
        eval: impl Fn(T) -> T + Send + Sync + 'static,
        derivative: impl Fn(T) -> T + Send + Sync + 'static,
    ) -> Self {
        RealFunction {
            eval: Box::new(eval),
            derivative: Some(Box::new(derivative)),
            name: None,
        }
    }

    /// `ln x`, positive-valued for `x > 1`.
    pub fn builtin_ln() -> Self {
        let mut f = Self::with_derivative(|x: T| x.ln(), |x: T| x.recip());
        f.name = Some("ln");
        f
    }

    /// `e^x`.
    pub fn builtin_exp() -> Self {
        let mut f = Self::with_derivative(|x: T| x.exp(), |x: T| x.exp());
        f.name = Some("exp");
        f
    }

    /// `sin x`, positive-valued on `(2nπ, (2n+1)π)`.
    pub fn builtin_sin() -> Self {
        let mut f = Self::with_derivative(|x: T| x.sin(), |x: T| x.cos());
        f.name = Some("sin");
        f
    }

    /// Looks up one of the builtin functions by name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "ln" => Some(Self::builtin_ln()),
            "exp" => Some(Self::builtin_exp()),
            "sin" => Some(Self::builtin_sin()),
            _ => None,
        }
    }

    #[inline]
    pub fn eval(&self, x: T) -> T {
        (self.eval)(x)
    }

    #[inline]
    pub fn classical_derivative(&self, x: T) -> Option<T> {
        self.derivative.as_ref().map(|d| d(x))
    }

    #[inline]
    pub fn has_derivative(&self) -> bool {
        self.derivative.is_some()
    }

    pub fn name(&self) -> Option<&'static str> {
        self.name
    }
}

impl<T> std::fmt::Debug for RealFunction<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RealFunction")
            .field("name", &self.name)
            .field("has_derivative", &self.derivative.is_some())
            .finish()
    }
}

/// Default central-difference step, `eps^(1/3)`.
pub fn default_step<T: GeoFloat>() -> T {
    T::epsilon().powf(cast(1.0 / 3.0))
}

/// Bigeometric derivative from classical data: `e^(a f'(a) / f(a))`.
pub fn dg_from_classical<T: GeoFloat>(a: T, f_a: T, fprime_a: T) -> Result<GeoReal<T>> {
    if a <= T::zero() || !a.is_finite() {
        return Err(GeoError::Domain(format!("point {a} must be positive")));
    }
    if f_a <= T::zero() || !f_a.is_finite() {
        return Err(GeoError::Domain(format!(
            "function value {f_a} must be positive"
        )));
    }
    GeoReal::from_log(a * fprime_a / f_a)
}

/// Central-difference estimate of the bigeometric derivative.
///
/// Probes `f` at `a·e^(±h)` and differences the logs, so the estimate is the
/// classical central difference of `g(t) = ln f(e^t)` at `t = ln a`.
pub fn dg_numeric<T: GeoFloat>(f: &RealFunction<T>, a: T, h: T) -> Result<GeoReal<T>> {
    if a <= T::zero() || !a.is_finite() {
        return Err(GeoError::Domain(format!("point {a} must be positive")));
    }
    if h <= T::zero() {
        return Err(GeoError::Domain(format!("step {h} must be positive")));
    }
    let probe = |x: T| -> Result<T> {
        let v = f.eval(x);
        if v > T::zero() && v.is_finite() {
            Ok(v.ln())
        } else {
            Err(GeoError::Evaluation(format!(
                "f({x}) = {v} is outside the geometric realm"
            )))
        }
    };
    let two = cast::<T>(2.0);
    let hi = probe(a * h.exp())?;
    let lo = probe(a * (-h).exp())?;
    GeoReal::from_log((hi - lo) / (two * h))
}

/// Bigeometric derivative of `f` at `a`: the exact classical-derivative
/// formula when one is attached, the numeric estimate at the default step
/// otherwise.
pub fn dg<T: GeoFloat>(f: &RealFunction<T>, a: T) -> Result<GeoReal<T>> {
    match f.classical_derivative(a) {
        Some(fp) => {
            let fa = f.eval(a);
            dg_from_classical(a, fa, fp)
        }
        None => dg_numeric(f, a, default_step()),
    }
}
