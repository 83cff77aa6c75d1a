//! Truncated norms and growth diagnostics for the bigeometric Cesàro
//! difference sequence spaces.
//!
//! The spaces are defined by finiteness of
//! `_G∑_n |(e ⊘ e^n) ⊙ _G∑_{k≤n} Δ_G^m x_k|^{p_G}` (or the supremum for
//! `p = ∞`). Finiteness is undecidable from a finite prefix, so this module
//! reports truncated norms plus partial-sum growth diagnostics with an
//! explicit, documented classification — never a convergence verdict.

use crate::diff::{delta_log, delta_m, GeoSequence};
use crate::error::{GeoError, Result};
use crate::real::{gabs, GeoReal};
use crate::scalar::{cast, cast_usize, GeoFloat};

/// Norm exponent: a finite `p ≥ 1` or the supremum norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PExponent<T> {
    Finite(T),
    Infinity,
}

impl<T: GeoFloat> std::fmt::Display for PExponent<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PExponent::Finite(p) => write!(f, "{p}"),
            PExponent::Infinity => write!(f, "inf"),
        }
    }
}

/// A truncated norm evaluation `‖x‖ = head ⊕ tail`.
#[derive(Clone, Copy, Debug)]
pub struct NormReport<T> {
    head_term: GeoReal<T>,
    tail_term: GeoReal<T>,
    total: GeoReal<T>,
    truncation: usize,
    p: PExponent<T>,
}

impl<T: GeoFloat> NormReport<T> {
    pub fn head_term(&self) -> GeoReal<T> {
        self.head_term
    }
    pub fn tail_term(&self) -> GeoReal<T> {
        self.tail_term
    }
    pub fn total(&self) -> GeoReal<T> {
        self.total
    }
    pub fn truncation(&self) -> usize {
        self.truncation
    }
    pub fn p(&self) -> PExponent<T> {
        self.p
    }
}

/// Growth classification of a non-decreasing partial-log-sum curve.
///
/// Thresholds (applied to the last half of the curve):
/// least-squares slope below `1e-3` is convergent-like; increments all
/// within 10% of their mean (which is positive) is linear-divergent;
/// increments whose later-half mean exceeds the earlier-half mean by more
/// than 10% is superlinear-divergent; anything else is inconclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    ConvergentLike,
    LinearDivergent,
    SuperlinearDivergent,
    Inconclusive,
}

impl std::fmt::Display for Growth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Growth::ConvergentLike => "convergent-like",
            Growth::LinearDivergent => "linear-divergent",
            Growth::SuperlinearDivergent => "superlinear-divergent",
            Growth::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// Finite surrogate for a `< ∞` membership condition.
#[derive(Clone, Debug)]
pub struct GrowthDiagnostic<T> {
    partial_log_sums: Vec<(usize, T)>,
    fitted_slope: T,
    classification: Growth,
}

impl<T: GeoFloat> GrowthDiagnostic<T> {
    pub fn partial_log_sums(&self) -> &[(usize, T)] {
        &self.partial_log_sums
    }
    pub fn fitted_slope(&self) -> T {
        self.fitted_slope
    }
    pub fn classification(&self) -> Growth {
        self.classification
    }
    /// Log of the final truncated G-sum (or running max).
    pub fn final_log(&self) -> T {
        self.partial_log_sums
            .last()
            .map(|&(_, s)| s)
            .unwrap_or_else(T::zero)
    }
}

/// Pairwise (cascade) summation, used for long log-domain aggregates.
pub(crate) fn pairwise_sum<T: GeoFloat>(xs: &[T]) -> T {
    if xs.len() <= 8 {
        return xs.iter().fold(T::zero(), |a, &b| a + b);
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

fn check_window<T: GeoFloat>(x: &GeoSequence<T>, m: usize, n_trunc: usize) -> Result<()> {
    if m == 0 {
        return Err(GeoError::Domain("space order m must be at least 1".into()));
    }
    if n_trunc == 0 {
        return Err(GeoError::IndexOutOfRange(
            "truncation must be at least 1".into(),
        ));
    }
    if n_trunc + m > x.len() {
        return Err(GeoError::IndexOutOfRange(format!(
            "truncation {n_trunc} with order {m} needs {} terms, have {}",
            n_trunc + m,
            x.len()
        )));
    }
    Ok(())
}

/// Logs of the Cesàro-mean moduli `|(e ⊘ e^n) ⊙ _G∑_{k≤n} Δ_G^m x_k|_G`.
fn cesaro_abs_logs<T: GeoFloat>(x: &GeoSequence<T>, m: usize, n_trunc: usize) -> Result<Vec<T>> {
    let mut running = T::zero();
    let mut out = Vec::with_capacity(n_trunc);
    for n in 1..=n_trunc {
        running = running + delta_log(x, m, n)?;
        out.push((running / cast_usize(n)).abs());
    }
    Ok(out)
}

fn head_log<T: GeoFloat>(x: &GeoSequence<T>, m: usize) -> Result<T> {
    let logs: Vec<T> = (1..=m)
        .map(|i| x.log_at(i).map(|l| l.abs()))
        .collect::<Result<_>>()?;
    Ok(pairwise_sum(&logs))
}

/// Truncated p-norm `_G∑_{i≤m} |x_i|_G ⊕ (_G∑_{n≤N} |…|^{p_G})^{(1/p)_G}`.
pub fn norm_p<T: GeoFloat>(
    x: &GeoSequence<T>,
    m: usize,
    p: T,
    n_trunc: usize,
) -> Result<NormReport<T>> {
    if p < T::one() || !p.is_finite() {
        return Err(GeoError::InvalidP(format!("p = {p} must satisfy p ≥ 1")));
    }
    check_window(x, m, n_trunc)?;
    let head = head_log(x, m)?;
    let powered: Vec<T> = cesaro_abs_logs(x, m, n_trunc)?
        .into_iter()
        .map(|c| c.powf(p))
        .collect();
    let tail = pairwise_sum(&powered).powf(p.recip());
    Ok(NormReport {
        head_term: GeoReal::raw(head),
        tail_term: GeoReal::raw(tail),
        total: GeoReal::raw(head + tail),
        truncation: n_trunc,
        p: PExponent::Finite(p),
    })
}

/// Truncated supremum norm `_G∑_{i≤m} |x_i|_G ⊕ sup_{n≤N} |…|_G`.
pub fn norm_inf<T: GeoFloat>(
    x: &GeoSequence<T>,
    m: usize,
    n_trunc: usize,
) -> Result<NormReport<T>> {
    check_window(x, m, n_trunc)?;
    let head = head_log(x, m)?;
    let tail = cesaro_abs_logs(x, m, n_trunc)?
        .into_iter()
        .fold(T::zero(), T::max);
    Ok(NormReport {
        head_term: GeoReal::raw(head),
        tail_term: GeoReal::raw(tail),
        total: GeoReal::raw(head + tail),
        truncation: n_trunc,
        p: PExponent::Infinity,
    })
}

/// Least-squares slope of `s ≈ a + b·n` over the given points.
fn ls_slope<T: GeoFloat>(points: &[(usize, T)]) -> T {
    let n = cast_usize::<T>(points.len());
    if points.len() < 2 {
        return T::zero();
    }
    let mut sx = T::zero();
    let mut sy = T::zero();
    let mut sxx = T::zero();
    let mut sxy = T::zero();
    for &(i, y) in points {
        let xi = cast_usize::<T>(i);
        sx = sx + xi;
        sy = sy + y;
        sxx = sxx + xi * xi;
        sxy = sxy + xi * y;
    }
    let denom = n * sxx - sx * sx;
    if denom == T::zero() {
        T::zero()
    } else {
        (n * sxy - sx * sy) / denom
    }
}

fn classify<T: GeoFloat>(points: &[(usize, T)]) -> (T, Growth) {
    let half = &points[points.len() / 2..];
    let slope = ls_slope(half);
    if half.len() < 4 {
        return (slope, Growth::Inconclusive);
    }
    if slope.abs() < cast(1e-3) {
        return (slope, Growth::ConvergentLike);
    }
    let increments: Vec<T> = half.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let mean = pairwise_sum(&increments) / cast_usize(increments.len());
    let ten_pct = cast::<T>(0.1);
    if mean > T::zero()
        && increments
            .iter()
            .all(|&d| (d - mean).abs() <= ten_pct * mean)
    {
        return (slope, Growth::LinearDivergent);
    }
    let mid = increments.len() / 2;
    let first = pairwise_sum(&increments[..mid]) / cast_usize(mid.max(1));
    let second = pairwise_sum(&increments[mid..]) / cast_usize((increments.len() - mid).max(1));
    if first > T::zero() && second > first * (T::one() + ten_pct) {
        return (slope, Growth::SuperlinearDivergent);
    }
    (slope, Growth::Inconclusive)
}

/// Finite-prefix surrogate for membership of `x` in the order-`m` space.
pub fn membership_diagnostic<T: GeoFloat>(
    x: &GeoSequence<T>,
    m: usize,
    p: PExponent<T>,
    n_trunc: usize,
) -> Result<GrowthDiagnostic<T>> {
    if let PExponent::Finite(q) = p {
        if q < T::one() || !q.is_finite() {
            return Err(GeoError::InvalidP(format!("p = {q} must satisfy p ≥ 1")));
        }
    }
    check_window(x, m, n_trunc)?;
    let cesaro = cesaro_abs_logs(x, m, n_trunc)?;
    let mut points = Vec::with_capacity(n_trunc);
    let mut acc = T::zero();
    for (i, c) in cesaro.into_iter().enumerate() {
        acc = match p {
            PExponent::Finite(q) => acc + c.powf(q),
            PExponent::Infinity => acc.max(c),
        };
        points.push((i + 1, acc));
    }
    let (fitted_slope, classification) = classify(&points);
    Ok(GrowthDiagnostic {
        partial_log_sums: points,
        fitted_slope,
        classification,
    })
}

/// `υ(x) = (1, …, 1, x_{m+1}, x_{m+2}, …)`: the first `m` terms replaced by
/// the geometric zero.
pub fn upsilon_project<T: GeoFloat>(x: &GeoSequence<T>, m: usize) -> Result<GeoSequence<T>> {
    if m > x.len() {
        return Err(GeoError::IndexOutOfRange(format!(
            "cannot project first {m} terms of a {}-term prefix",
            x.len()
        )));
    }
    let mut terms = x.terms().to_vec();
    for t in terms.iter_mut().take(m) {
        *t = GeoReal::geometric_zero();
    }
    Ok(GeoSequence::from_terms(terms))
}

/// Partial sums of the α-dual membership series
/// `_G∑_k e^{k^m} ⊙ |a_k|_G` for the υ-projected order-`m` space.
pub fn dual_partial_sum<T: GeoFloat>(
    a: &GeoSequence<T>,
    m: usize,
    n_trunc: usize,
) -> Result<GrowthDiagnostic<T>> {
    if n_trunc == 0 || n_trunc > a.len() {
        return Err(GeoError::IndexOutOfRange(format!(
            "truncation {n_trunc} outside 1..={}",
            a.len()
        )));
    }
    let mut points = Vec::with_capacity(n_trunc);
    let mut acc = T::zero();
    for k in 1..=n_trunc {
        let weight = cast_usize::<T>(k).powi(m as i32);
        acc = acc + weight * a.log_at(k)?.abs();
        points.push((k, acc));
    }
    let (fitted_slope, classification) = classify(&points);
    Ok(GrowthDiagnostic {
        partial_log_sums: points,
        fitted_slope,
        classification,
    })
}

/// One row of the bounded-moduli diagnostics: the index and the pair
/// `(e^{k^{-1}} ⊙ |Δ_G^{m-1} x_k|_G, e^{k^{-m}} ⊙ |x_k|_G)`.
pub type LemmaDiagRow<T> = (usize, GeoReal<T>, GeoReal<T>);

/// Per-index diagnostic pairs for `k ≤ N`; the caller inspects finite-prefix
/// boundedness.
pub fn lemma_diag_sequences<T: GeoFloat>(
    x: &GeoSequence<T>,
    m: usize,
    n_trunc: usize,
) -> Result<Vec<LemmaDiagRow<T>>> {
    if m == 0 {
        return Err(GeoError::Domain("space order m must be at least 1".into()));
    }
    if n_trunc + m > x.len() {
        return Err(GeoError::IndexOutOfRange(format!(
            "diagnostics to k={n_trunc} with order {m} need {} terms, have {}",
            n_trunc + m,
            x.len()
        )));
    }
    let mut out = Vec::with_capacity(n_trunc);
    for k in 1..=n_trunc {
        let kf = cast_usize::<T>(k);
        let d1 = kf.recip() * gabs(delta_m(x, m - 1, k)?).log_value();
        let d2 = kf.powi(-(m as i32)) * x.log_at(k)?.abs();
        out.push((k, GeoReal::raw(d1), GeoReal::raw(d2)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn witness(m: usize, len: usize) -> GeoSequence<f64> {
        // x_k = e^{k^{m-1}}
        GeoSequence::from_generator(len, move |k| (k as f64).powi(m as i32 - 1)).unwrap()
    }

    #[test]
    fn norm_of_all_ones_is_geometric_zero() {
        let x = GeoSequence::from_log_terms(&[0.0; 30]).unwrap();
        let r = norm_p(&x, 2, 1.5, 20).unwrap();
        assert_abs_diff_eq!(r.total().log_value(), 0.0, epsilon = 0.0);
        let r = norm_inf(&x, 2, 20).unwrap();
        assert_abs_diff_eq!(r.total().log_value(), 0.0, epsilon = 0.0);
    }

    #[test]
    fn witness_norm_has_flat_tail_and_known_head() {
        for m in 2..=4usize {
            let x = witness(m, 80);
            let r = norm_p(&x, m, 2.0, 60).unwrap();
            assert_abs_diff_eq!(r.tail_term().log_value(), 0.0, epsilon = 0.0);
            let head_expected: f64 = (1..=m).map(|i| (i as f64).powi(m as i32 - 1)).sum();
            assert_abs_diff_eq!(r.head_term().log_value(), head_expected, epsilon = 0.0);
            assert_abs_diff_eq!(r.total().log_value(), head_expected, epsilon = 0.0);
            let ri = norm_inf(&x, m, 60).unwrap();
            assert_abs_diff_eq!(ri.tail_term().log_value(), 0.0, epsilon = 0.0);
            assert_abs_diff_eq!(ri.total().log_value(), head_expected, epsilon = 0.0);
        }
    }

    #[test]
    fn norm_rejects_bad_p_and_short_prefixes() {
        let x = GeoSequence::from_log_terms(&[0.1; 10]).unwrap();
        assert!(matches!(norm_p(&x, 1, 0.5, 5), Err(GeoError::InvalidP(_))));
        assert!(matches!(
            norm_p(&x, 1, f64::NAN, 5),
            Err(GeoError::InvalidP(_))
        ));
        assert!(matches!(
            norm_p(&x, 2, 1.0, 9),
            Err(GeoError::IndexOutOfRange(_))
        ));
        assert!(norm_inf(&x, 2, 9).is_err());
    }

    #[test]
    fn membership_witness_convergent_at_its_order() {
        let m = 3usize;
        let x = witness(m, 210);
        let d = membership_diagnostic(&x, m, PExponent::Finite(2.0), 200).unwrap();
        assert_eq!(d.classification(), Growth::ConvergentLike);
        assert_abs_diff_eq!(d.fitted_slope(), 0.0, epsilon = 0.0);
        assert_abs_diff_eq!(d.final_log(), 0.0, epsilon = 0.0);
    }

    #[test]
    fn membership_witness_linear_divergent_below_its_order() {
        // order m-1 on x_k = e^{k^{m-1}} diverges linearly with slope (m-1)!
        for (m, fact) in [(2usize, 1.0), (3, 2.0), (4, 6.0)] {
            let x = witness(m, 210);
            let d = membership_diagnostic(&x, m - 1, PExponent::Finite(1.0), 200).unwrap();
            assert_eq!(d.classification(), Growth::LinearDivergent);
            assert_abs_diff_eq!(d.fitted_slope(), fact, epsilon = 1e-9);
        }
    }

    #[test]
    fn membership_superlinear_when_two_orders_low() {
        // Δ^{m-1} of k^m grows linearly, so partial sums grow quadratically
        let m = 3usize;
        let x = GeoSequence::from_generator(210, move |k| (k as f64).powi(m as i32)).unwrap();
        let d = membership_diagnostic(&x, m - 1, PExponent::Finite(1.0), 200).unwrap();
        assert_eq!(d.classification(), Growth::SuperlinearDivergent);
    }

    #[test]
    fn membership_all_ones_convergent() {
        let x = GeoSequence::from_log_terms(&[0.0; 210]).unwrap();
        let d = membership_diagnostic(&x, 2, PExponent::Infinity, 200).unwrap();
        assert_eq!(d.classification(), Growth::ConvergentLike);
    }

    #[test]
    fn sup_mode_bounded_for_witness_at_order() {
        // x_k = e^{k^m} lies in the sup-norm space of order m
        let m = 2usize;
        let x = GeoSequence::from_generator(210, move |k| (k as f64).powi(m as i32)).unwrap();
        let d = membership_diagnostic(&x, m, PExponent::Infinity, 200).unwrap();
        assert_eq!(d.classification(), Growth::ConvergentLike);
    }

    #[test]
    fn upsilon_projection_flattens_prefix_and_is_idempotent() {
        let x = GeoSequence::from_log_terms(&[1.0, 2.0, 3.0]).unwrap();
        let p = upsilon_project(&x, 2).unwrap();
        assert_eq!(p.log_at(1).unwrap(), 0.0);
        assert_eq!(p.log_at(2).unwrap(), 0.0);
        assert_eq!(p.log_at(3).unwrap(), 3.0);
        let pp = upsilon_project(&p, 2).unwrap();
        for k in 1..=3 {
            assert_eq!(pp.log_at(k).unwrap(), p.log_at(k).unwrap());
        }
        assert!(upsilon_project(&x, 4).is_err());
    }

    #[test]
    fn dual_sum_convergent_example_matches_zeta_partials() {
        // a_k = e^{-k^{-(m+2)}}: summand logs are k^{-2}
        let m = 2usize;
        let a =
            GeoSequence::from_generator(200, move |k| -(k as f64).powi(-(m as i32) - 2)).unwrap();
        let d = dual_partial_sum(&a, m, 200).unwrap();
        assert_eq!(d.classification(), Growth::ConvergentLike);
        let oracle: f64 = (1..=200).map(|k| (k as f64).powi(-2)).sum();
        assert_abs_diff_eq!(d.final_log(), oracle, epsilon = 1e-12);
        // frozen: e^{Σ_{k≤200} k^{-2}}
        assert_abs_diff_eq!(d.final_log().exp(), 5.154893955245762, epsilon = 1e-9);
    }

    #[test]
    fn dual_sum_unit_sequence_stays_at_one() {
        let a = GeoSequence::from_log_terms(&[0.0; 50]).unwrap();
        let d = dual_partial_sum(&a, 3, 50).unwrap();
        assert_eq!(d.classification(), Growth::ConvergentLike);
        assert_abs_diff_eq!(d.final_log(), 0.0, epsilon = 0.0);
    }

    #[test]
    fn dual_sum_borderline_diverges_linearly() {
        // a_k = e^{k^{-m}}: each summand log is exactly 1
        let m = 3usize;
        let a = GeoSequence::from_generator(120, move |k| (k as f64).powi(-(m as i32))).unwrap();
        let d = dual_partial_sum(&a, m, 120).unwrap();
        assert_eq!(d.classification(), Growth::LinearDivergent);
        assert_abs_diff_eq!(d.fitted_slope(), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn lemma_diagnostics_for_unit_and_growth_witness() {
        let ones = GeoSequence::from_log_terms(&[0.0; 40]).unwrap();
        for (_, d1, d2) in lemma_diag_sequences(&ones, 2, 30).unwrap() {
            assert_abs_diff_eq!(d1.log_value(), 0.0, epsilon = 0.0);
            assert_abs_diff_eq!(d2.log_value(), 0.0, epsilon = 0.0);
        }
        // x_k = e^{k^m}: second diagnostic is identically e (up to the
        // rounding of k^{-m} itself)
        let m = 2usize;
        let x = GeoSequence::from_generator(40, move |k| (k as f64).powi(m as i32)).unwrap();
        for (_, _, d2) in lemma_diag_sequences(&x, m, 30).unwrap() {
            assert_abs_diff_eq!(d2.log_value(), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn lemma_diagnostics_bounded_for_projected_tame_sequence() {
        // υ-projected sequence with bounded Cesàro means: both diagnostics stay
        // below a small frozen bound computed from the same prefix.
        let m = 2usize;
        let x = GeoSequence::from_generator(80, |k| (k as f64).sin() / k as f64).unwrap();
        let proj = upsilon_project(&x, m).unwrap();
        let diags = lemma_diag_sequences(&proj, m, 70).unwrap();
        let max1 = diags
            .iter()
            .map(|(_, d1, _)| d1.log_value())
            .fold(f64::NEG_INFINITY, f64::max);
        let max2 = diags
            .iter()
            .map(|(_, _, d2)| d2.log_value())
            .fold(f64::NEG_INFINITY, f64::max);
        // independent recomputation of the same maxima from raw logs
        let mut oracle1 = f64::NEG_INFINITY;
        let mut oracle2 = f64::NEG_INFINITY;
        for k in 1..=70usize {
            let lk = proj.log_at(k).unwrap();
            let lk1 = proj.log_at(k + 1).unwrap();
            oracle1 = oracle1.max((lk - lk1).abs() / k as f64);
            oracle2 = oracle2.max(lk.abs() / (k * k) as f64);
        }
        assert_abs_diff_eq!(max1, oracle1, epsilon = 1e-15);
        assert_abs_diff_eq!(max2, oracle2, epsilon = 1e-15);
        assert!(max1 < 1.0 && max2 < 1.0);
    }

    #[test]
    fn pairwise_sum_matches_sequential_on_smooth_data() {
        let xs: Vec<f64> = (0..1000).map(|i| (i as f64 * 0.37).sin().abs()).collect();
        let seq: f64 = xs.iter().sum();
        assert_abs_diff_eq!(pairwise_sum(&xs), seq, epsilon = 1e-9);
    }
}
