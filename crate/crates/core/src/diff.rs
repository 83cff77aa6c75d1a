//! Geometric difference operators over sequences of geometric reals.
//!
//! `Δ_G x_k = x_k ⊖ x_{k+1}` and `Δ_G^m x_k = Δ_G^{m-1}(x_k ⊖ x_{k+1})`,
//! which in the log domain is the classical (sign-flipped) m-th forward
//! difference: `ln Δ_G^m x_k = Σ_v (-1)^v C(m,v) ln x_{k+v}`.
//!
//! Sequences are 1-indexed, matching the summations they feed into.

use std::sync::Arc;

use crate::error::{GeoError, Result};
use crate::real::{gsub, GeoReal};
use crate::scalar::{cast_usize, GeoFloat};

/// Largest difference order with exactly computed binomial coefficients.
pub const MAX_DIFFERENCE_ORDER: usize = 60;

type Generator<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

/// A finite prefix of a sequence in the geometric realm, optionally backed by
/// a closed-form log-domain rule `k ↦ ln x_k`.
#[derive(Clone)]
pub struct GeoSequence<T> {
    terms: Vec<GeoReal<T>>,
    generator: Option<Generator<T>>,
}

impl<T: GeoFloat> GeoSequence<T> {
    pub fn from_terms(terms: Vec<GeoReal<T>>) -> Self {
        GeoSequence {
            terms,
            generator: None,
        }
    }

    /// Builds a prefix from raw log values.
    pub fn from_log_terms(logs: &[T]) -> Result<Self> {
        let terms = logs
            .iter()
            .map(|&l| GeoReal::from_log(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(terms))
    }

    /// Materializes `len` terms of the log-domain rule `k ↦ ln x_k` (1-indexed).
    pub fn from_generator(
        len: usize,
        rule: impl Fn(usize) -> T + Send + Sync + 'static,
    ) -> Result<Self> {
        let terms = (1..=len)
            .map(|k| GeoReal::from_log(rule(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeoSequence {
            terms,
            generator: Some(Arc::new(rule)),
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term `x_k`, 1-indexed.
    pub fn term(&self, k: usize) -> Result<GeoReal<T>> {
        if k == 0 || k > self.terms.len() {
            return Err(GeoError::IndexOutOfRange(format!(
                "term index {k} outside 1..={}",
                self.terms.len()
            )));
        }
        Ok(self.terms[k - 1])
    }

    /// `ln x_k`, 1-indexed.
    pub fn log_at(&self, k: usize) -> Result<T> {
        self.term(k).map(GeoReal::log_value)
    }

    pub fn terms(&self) -> &[GeoReal<T>] {
        &self.terms
    }

    pub fn has_generator(&self) -> bool {
        self.generator.is_some()
    }

    /// Re-evaluates the backing rule at `k`, if one is attached.
    pub fn generator_log(&self, k: usize) -> Option<T> {
        self.generator.as_ref().map(|g| g(k))
    }
}

impl<T: GeoFloat> std::fmt::Debug for GeoSequence<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GeoSequence")
            .field("len", &self.terms.len())
            .field("generator", &self.generator.is_some())
            .finish()
    }
}

/// Exact binomial coefficient `C(m, v)`; orders above
/// [`MAX_DIFFERENCE_ORDER`] are refused rather than silently rounded.
pub fn binomial(m: usize, v: usize) -> Result<u128> {
    if m > MAX_DIFFERENCE_ORDER {
        return Err(GeoError::Domain(format!(
            "difference order {m} exceeds the exact-binomial limit {MAX_DIFFERENCE_ORDER}"
        )));
    }
    if v > m {
        return Ok(0);
    }
    let v = v.min(m - v);
    let mut c: u128 = 1;
    for i in 0..v {
        c = c * (m - i) as u128 / (i + 1) as u128;
    }
    Ok(c)
}

/// Log-domain value of `Δ_G^m x_k` via the binomial formula.
pub(crate) fn delta_log<T: GeoFloat>(x: &GeoSequence<T>, m: usize, k: usize) -> Result<T> {
    if k == 0 || k + m > x.len() {
        return Err(GeoError::IndexOutOfRange(format!(
            "Δ^{m} at k={k} needs terms up to {} but only {} are materialized",
            k + m,
            x.len()
        )));
    }
    let mut acc = T::zero();
    let mut sign = T::one();
    for v in 0..=m {
        let c = T::from_u128(binomial(m, v)?).expect("binomial fits scalar type");
        acc = acc + sign * c * x.terms[k - 1 + v].log_value();
        sign = -sign;
    }
    Ok(acc)
}

/// `Δ_G^m x_k` for a 1-indexed position `k`; `m = 0` returns `x_k`.
pub fn delta_m<T: GeoFloat>(x: &GeoSequence<T>, m: usize, k: usize) -> Result<GeoReal<T>> {
    delta_log(x, m, k).map(GeoReal::raw)
}

/// Cesàro mean of the first `n` m-th differences:
/// `(e ⊘ e^n) ⊙ _G∑_{k=1}^n Δ_G^m x_k`.
pub fn cesaro_mean_partial<T: GeoFloat>(
    x: &GeoSequence<T>,
    m: usize,
    n: usize,
) -> Result<GeoReal<T>> {
    if n == 0 {
        return Err(GeoError::IndexOutOfRange("n must be at least 1".into()));
    }
    if n + m > x.len() {
        return Err(GeoError::IndexOutOfRange(format!(
            "Cesàro mean at n={n} with order {m} needs {} terms, have {}",
            n + m,
            x.len()
        )));
    }
    let mut acc = T::zero();
    for k in 1..=n {
        acc = acc + delta_log(x, m, k)?;
    }
    Ok(GeoReal::raw(acc / cast_usize(n)))
}

/// The telescoped partial sum
/// `_G∑_{k=1}^n Δ_G^m x_k = Δ_G^{m-1} x_1 ⊖ Δ_G^{m-1} x_{n+1}`.
pub fn telescoped_partial<T: GeoFloat>(
    x: &GeoSequence<T>,
    m: usize,
    n: usize,
) -> Result<GeoReal<T>> {
    if m == 0 {
        return Err(GeoError::Domain(
            "telescoping requires a positive difference order".into(),
        ));
    }
    let head = delta_m(x, m - 1, 1)?;
    let tail = delta_m(x, m - 1, n + 1)?;
    Ok(gsub(head, tail))
}
