//! Bigeometric (non-Newtonian) calculus.
//!
//! The geometric realm is the set of strictly positive reals with arithmetic
//! generated by `exp`: addition is ordinary multiplication, multiplication is
//! `exp(ln u · ln v)`, and so on. Everything in this crate lives canonically
//! in the log domain, where each geometric operation is the matching
//! classical one — that single conjugacy is why difference operators, norms,
//! matrix maps, and Hermite interpolation all reduce to stable classical
//! computations on logs.
//!
//! Modules:
//! - [`real`]: geometric reals and the primitive operations
//! - [`deriv`]: bigeometric derivatives (exact and central-difference)
//! - [`diff`]: geometric difference operators over sequences
//! - [`spaces`]: truncated Cesàro difference-space norms and growth
//!   diagnostics
//! - [`matrix`]: matrix actions and the derived-matrix construction
//! - [`hermite`]: bigeometric Hermite interpolation, Lagrange and Newton
//!   forms, with a classical oracle
//!
//! The core is generic over the scalar (`f32`/`f64` through `num-traits`);
//! the `*64` aliases below are the types most code wants.

pub mod deriv;
pub mod diff;
pub mod error;
pub mod hermite;
pub mod matrix;
pub mod real;
pub mod scalar;
pub mod spaces;

pub use error::{GeoError, Result};
pub use real::{gabs, gadd, gdiv, gmetric, gmul, gpow, gprod, gsub, gsum, GeoReal};
pub use scalar::{default_log_tolerance, GeoFloat};

pub use deriv::{default_step, dg, dg_from_classical, dg_numeric, RealFunction};
pub use diff::{binomial, cesaro_mean_partial, delta_m, telescoped_partial, GeoSequence};
pub use hermite::{
    classical_hermite_oracle, divided_diff_table, eval_lagrange, eval_newton, lagrange_h,
    lagrange_t, newton_coeffs, BigeoPolynomial, DerivativeSpec, DividedDiffTable, HermiteData,
    HermiteNode,
};
pub use matrix::{apply_row, build_b, row_modulus_prefix_sums, transform_consistency, GeoMatrix};
pub use spaces::{
    dual_partial_sum, lemma_diag_sequences, membership_diagnostic, norm_inf, norm_p,
    upsilon_project, Growth, GrowthDiagnostic, LemmaDiagRow, NormReport, PExponent,
};

/// Geometric real over `f64`.
pub type GeoReal64 = GeoReal<f64>;
/// Geometric real over `f32`.
pub type GeoReal32 = GeoReal<f32>;
/// Sequence prefix over `f64`.
pub type GeoSequence64 = GeoSequence<f64>;
/// Matrix truncation over `f64`.
pub type GeoMatrix64 = GeoMatrix<f64>;
/// Hermite dataset over `f64`.
pub type HermiteData64 = HermiteData<f64>;
/// Newton-form bigeometric polynomial over `f64`.
pub type BigeoPolynomial64 = BigeoPolynomial<f64>;
