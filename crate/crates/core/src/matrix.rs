//! Finite truncations of infinite matrices of geometric reals and the
//! derived matrix that characterizes maps into the Cesàro difference spaces.
//!
//! For `A = (a_nk)` the row action is `A_n(x) = _G∑_k a_nk ⊙ x_k`, and the
//! derived matrix is `b_ik = e^{1/i} ⊙ (Δ_G^{m-1} a_1k ⊖ Δ_G^{m-1} a_{i+1,k})`
//! with the difference operator acting along the row index `n` for each fixed
//! column `k`. Truncation shrinks the derived matrix to `rows − m` rows.

use crate::diff::{delta_m, GeoSequence};
use crate::error::{GeoError, Result};
use crate::real::{gabs, GeoReal};
use crate::scalar::{cast_usize, GeoFloat};

/// A finite matrix of geometric reals, rows `n = 1..R`, columns `k = 1..K`.
#[derive(Clone, Debug)]
pub struct GeoMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<GeoReal<T>>,
}

impl<T: GeoFloat> GeoMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<GeoReal<T>>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(GeoError::DimensionMismatch(
                "matrix must have at least one row and one column".into(),
            ));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(GeoError::DimensionMismatch(
                "matrix rows have unequal lengths".into(),
            ));
        }
        Ok(GeoMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_log_rows(rows: &[Vec<T>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&l| GeoReal::from_log(l))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `a_nk`, 1-indexed.
    pub fn entry(&self, n: usize, k: usize) -> Result<GeoReal<T>> {
        if n == 0 || n > self.rows || k == 0 || k > self.cols {
            return Err(GeoError::IndexOutOfRange(format!(
                "entry ({n},{k}) outside {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.data[(n - 1) * self.cols + (k - 1)])
    }

    /// Column `k` as a sequence along the row index.
    fn column_sequence(&self, k: usize) -> GeoSequence<T> {
        let terms = (1..=self.rows)
            .map(|n| self.data[(n - 1) * self.cols + (k - 1)])
            .collect();
        GeoSequence::from_terms(terms)
    }
}

/// Row action `A_n(x) = _G∑_{k≤K} a_nk ⊙ x_k`.
pub fn apply_row<T: GeoFloat>(
    a: &GeoMatrix<T>,
    n: usize,
    x: &GeoSequence<T>,
) -> Result<GeoReal<T>> {
    if x.len() < a.cols() {
        return Err(GeoError::DimensionMismatch(format!(
            "sequence has {} terms, matrix needs {}",
            x.len(),
            a.cols()
        )));
    }
    let mut acc = T::zero();
    for k in 1..=a.cols() {
        acc = acc + a.entry(n, k)?.log_value() * x.log_at(k)?;
    }
    Ok(GeoReal::raw(acc))
}

/// The derived matrix `B = (b_ik)`, `i = 1..rows−m`.
pub fn build_b<T: GeoFloat>(a: &GeoMatrix<T>, m: usize) -> Result<GeoMatrix<T>> {
    if m == 0 {
        return Err(GeoError::Domain("order m must be at least 1".into()));
    }
    if a.rows() < m + 1 {
        return Err(GeoError::DimensionMismatch(format!(
            "derived matrix of order {m} needs at least {} rows, have {}",
            m + 1,
            a.rows()
        )));
    }
    let out_rows = a.rows() - m;
    let columns: Vec<GeoSequence<T>> = (1..=a.cols()).map(|k| a.column_sequence(k)).collect();
    let mut rows = Vec::with_capacity(out_rows);
    for i in 1..=out_rows {
        let inv_i = cast_usize::<T>(i).recip();
        let mut row = Vec::with_capacity(a.cols());
        for col in &columns {
            let top = delta_m(col, m - 1, 1)?.log_value();
            let shifted = delta_m(col, m - 1, i + 1)?.log_value();
            row.push(GeoReal::raw(inv_i * (top - shifted)));
        }
        rows.push(row);
    }
    GeoMatrix::from_rows(rows)
}

/// Both sides of the derived-matrix consistency identity:
/// `e^{1/i} ⊙ _G∑_{n≤i} Δ_G^m A_n(x)` and row `i` of `B` applied to `x`.
pub fn transform_consistency<T: GeoFloat>(
    a: &GeoMatrix<T>,
    m: usize,
    x: &GeoSequence<T>,
    i: usize,
) -> Result<(GeoReal<T>, GeoReal<T>)> {
    if m == 0 {
        return Err(GeoError::Domain("order m must be at least 1".into()));
    }
    if i == 0 || a.rows() < i + m {
        return Err(GeoError::DimensionMismatch(format!(
            "row index i={i} with order {m} needs at least {} rows, have {}",
            i + m,
            a.rows()
        )));
    }
    // (A_n(x))_n as a sequence, then its m-th differences
    let actions = (1..=a.rows())
        .map(|n| apply_row(a, n, x))
        .collect::<Result<Vec<_>>>()?;
    let action_seq = GeoSequence::from_terms(actions);
    let mut acc = T::zero();
    for n in 1..=i {
        acc = acc + delta_m(&action_seq, m, n)?.log_value();
    }
    let lhs = GeoReal::raw(acc / cast_usize(i));
    let rhs = apply_row(&build_b(a, m)?, i, x)?;
    Ok((lhs, rhs))
}

/// Running G-sums `_G∑_{k≤K'} |a_nk|_G` of row `n`, the finite surrogate for
/// the row-summability condition. Non-decreasing in the column count.
pub fn row_modulus_prefix_sums<T: GeoFloat>(a: &GeoMatrix<T>, n: usize) -> Result<Vec<GeoReal<T>>> {
    let mut acc = T::zero();
    let mut out = Vec::with_capacity(a.cols());
    for k in 1..=a.cols() {
        acc = acc + gabs(a.entry(n, k)?).log_value();
        out.push(GeoReal::raw(acc));
    }
    Ok(out)
}
