//! Bigeometric Hermite interpolation.
//!
//! Given nodes `x_i` with values `f(x_i)` and bigeometric derivatives
//! `D_G f(x_i)`, there is a unique bigeometric polynomial of geometric degree
//! at most `2n+1` that osculates the data. This module builds it in both the
//! Lagrange form (cardinal polynomials `H_i`, `Ĥ_i` from the squared basis
//! `T_{n,i}`) and the Newton form (geometric divided differences over the
//! duplicated abscissae `z_i = x_{⌊i/2⌋}`), plus an independent classical
//! check: in the log domain the whole problem is classical Hermite
//! interpolation of `(ln x_i, ln f_i, ln D_Gf_i)`.

use crate::deriv::{dg, dg_from_classical, RealFunction};
use crate::error::{GeoError, Result};
use crate::real::{gdiv, gsub, GeoReal};
use crate::scalar::{cast, default_log_tolerance, GeoFloat};

/// How the bigeometric derivative at a node is supplied.
#[derive(Clone, Copy, Debug)]
pub enum DerivativeSpec<T> {
    /// `D_G f(x_i)` directly (a positive real).
    Bigeometric(T),
    /// The classical `f'(x_i)`, converted through `e^(x f'/f)`.
    Classical(T),
}

/// One interpolation node: abscissa, value, bigeometric derivative.
#[derive(Clone, Copy, Debug)]
pub struct HermiteNode<T> {
    pub x: GeoReal<T>,
    pub f: GeoReal<T>,
    pub dgf: GeoReal<T>,
}

/// Validated Hermite data: positive, pairwise-distinct abscissae.
#[derive(Clone, Debug)]
pub struct HermiteData<T> {
    nodes: Vec<HermiteNode<T>>,
}

impl<T: GeoFloat> HermiteData<T> {
    /// Builds from raw `(x, f, derivative)` triples at the default node
    /// separation tolerance.
    pub fn new(points: &[(T, T, DerivativeSpec<T>)]) -> Result<Self> {
        Self::with_tolerance(points, default_log_tolerance())
    }

    pub fn with_tolerance(points: &[(T, T, DerivativeSpec<T>)], tol: T) -> Result<Self> {
        let mut nodes = Vec::with_capacity(points.len());
        for &(x, f, spec) in points {
            let xg = GeoReal::from_positive_real(x)?;
            let fg = GeoReal::from_positive_real(f)?;
            let dgf = match spec {
                DerivativeSpec::Bigeometric(d) => GeoReal::from_positive_real(d)?,
                DerivativeSpec::Classical(fp) => dg_from_classical(x, f, fp)?,
            };
            nodes.push(HermiteNode { x: xg, f: fg, dgf });
        }
        Self::from_nodes(nodes, tol)
    }

    /// Samples a positive function at the given abscissae; the derivative
    /// uses the attached classical derivative when present, a central
    /// difference otherwise.
    pub fn from_function(f: &RealFunction<T>, xs: &[T]) -> Result<Self> {
        let mut nodes = Vec::with_capacity(xs.len());
        for &x in xs {
            let v = f.eval(x);
            if v <= T::zero() || !v.is_finite() {
                return Err(GeoError::Evaluation(format!(
                    "f({x}) = {v} is outside the geometric realm"
                )));
            }
            nodes.push(HermiteNode {
                x: GeoReal::from_positive_real(x)?,
                f: GeoReal::from_positive_real(v)?,
                dgf: dg(f, x)?,
            });
        }
        Self::from_nodes(nodes, default_log_tolerance())
    }

    pub fn from_nodes(nodes: Vec<HermiteNode<T>>, tol: T) -> Result<Self> {
        if nodes.is_empty() {
            return Err(GeoError::DegenerateNodes("no nodes supplied".into()));
        }
        for i in 0..nodes.len() {
            for j in (i + 1)..nodes.len() {
                let gap = (nodes[i].x.log_value() - nodes[j].x.log_value()).abs();
                if gap <= tol {
                    return Err(GeoError::DegenerateNodes(format!(
                        "abscissae {} and {} coincide (log gap {gap})",
                        nodes[i].x, nodes[j].x
                    )));
                }
            }
        }
        Ok(HermiteData { nodes })
    }

    pub fn nodes(&self) -> &[HermiteNode<T>] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn node(&self, i: usize) -> Result<&HermiteNode<T>> {
        self.nodes.get(i).ok_or_else(|| {
            GeoError::IndexOutOfRange(format!("node index {i} outside 0..{}", self.nodes.len()))
        })
    }
}

/// The geometric Lagrange basis
/// `T_{n,i}(x) = ∏_{j≠i}(x ⊖ x_j) ⊘ ∏_{j≠i}(x_i ⊖ x_j)`.
///
/// Its log is the classical Lagrange basis polynomial over the log
/// abscissae, so `T_{n,i}(x_j)` is `e` for `j = i` and `1` otherwise.
pub fn lagrange_t<T: GeoFloat>(
    data: &HermiteData<T>,
    i: usize,
    x: GeoReal<T>,
) -> Result<GeoReal<T>> {
    let ti = data.node(i)?.x.log_value();
    let t = x.log_value();
    let mut num = T::one();
    let mut den = T::one();
    for (j, node) in data.nodes().iter().enumerate() {
        if j == i {
            continue;
        }
        let tj = node.x.log_value();
        num = num * (t - tj);
        den = den * (ti - tj);
    }
    Ok(GeoReal::raw(num / den))
}

/// Log of the bigeometric derivative of `T_{n,i}` at its own node: the sum
/// of reciprocal log gaps `Σ_{j≠i} 1/(t_i − t_j)`.
fn basis_log_derivative<T: GeoFloat>(data: &HermiteData<T>, i: usize) -> Result<T> {
    let ti = data.node(i)?.x.log_value();
    let mut s = T::zero();
    for (j, node) in data.nodes().iter().enumerate() {
        if j != i {
            s = s + (ti - node.x.log_value()).recip();
        }
    }
    Ok(s)
}

/// The cardinal pair
/// `H_i(x) = [e ⊖ e² ⊙ D_G T_{n,i}(x_i) ⊙ (x ⊖ x_i)] ⊙ T_{n,i}^{2_G}(x)` and
/// `Ĥ_i(x) = (x ⊖ x_i) ⊙ T_{n,i}^{2_G}(x)`.
pub fn lagrange_h<T: GeoFloat>(
    data: &HermiteData<T>,
    i: usize,
    x: GeoReal<T>,
) -> Result<(GeoReal<T>, GeoReal<T>)> {
    let ti = data.node(i)?.x.log_value();
    let t = x.log_value();
    let basis = lagrange_t(data, i, x)?.log_value();
    let sq = basis * basis;
    let two = cast::<T>(2.0);
    let dt = basis_log_derivative(data, i)?;
    let h = (T::one() - two * dt * (t - ti)) * sq;
    let h_hat = (t - ti) * sq;
    Ok((GeoReal::raw(h), GeoReal::raw(h_hat)))
}

/// Lagrange-form evaluation
/// `p_G(x) = _G∑_i H_i(x) ⊙ f(x_i) ⊕ _G∑_i Ĥ_i(x) ⊙ D_G f(x_i)`.
pub fn eval_lagrange<T: GeoFloat>(data: &HermiteData<T>, x: GeoReal<T>) -> Result<GeoReal<T>> {
    let mut acc = T::zero();
    for i in 0..data.len() {
        let (h, h_hat) = lagrange_h(data, i, x)?;
        let node = data.node(i)?;
        acc = acc + h.log_value() * node.f.log_value();
        acc = acc + h_hat.log_value() * node.dgf.log_value();
    }
    Ok(GeoReal::raw(acc))
}

/// Geometric divided-difference table over the duplicated abscissae.
///
/// Column 0 holds the duplicated `f` values; column 1 places `D_G f(x_i)` at
/// the equal-argument positions and the geometric quotient elsewhere; higher
/// columns follow the quotient recursion.
#[derive(Clone, Debug)]
pub struct DividedDiffTable<T> {
    z: Vec<GeoReal<T>>,
    columns: Vec<Vec<GeoReal<T>>>,
}

impl<T: GeoFloat> DividedDiffTable<T> {
    /// Duplicated abscissae `z_0 .. z_{2n+1}`.
    pub fn z(&self) -> &[GeoReal<T>] {
        &self.z
    }

    /// Column `c` (length `2n+2−c`); entry `i` is `f_G[z_i, …, z_{i+c}]`.
    pub fn column(&self, c: usize) -> Result<&[GeoReal<T>]> {
        self.columns
            .get(c)
            .map(Vec::as_slice)
            .ok_or_else(|| GeoError::IndexOutOfRange(format!("column {c}")))
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Entry `f_G[z_i, …, z_{i+c}]`.
    pub fn entry(&self, c: usize, i: usize) -> Result<GeoReal<T>> {
        self.column(c)?
            .get(i)
            .copied()
            .ok_or_else(|| GeoError::IndexOutOfRange(format!("entry {i} of column {c}")))
    }
}

/// Builds the geometric divided-difference table for Hermite data.
pub fn divided_diff_table<T: GeoFloat>(data: &HermiteData<T>) -> Result<DividedDiffTable<T>> {
    let n1 = data.len();
    let size = 2 * n1;
    let mut z = Vec::with_capacity(size);
    let mut col0 = Vec::with_capacity(size);
    for node in data.nodes() {
        z.push(node.x);
        z.push(node.x);
        col0.push(node.f);
        col0.push(node.f);
    }
    let quotient = |hi: GeoReal<T>, lo: GeoReal<T>, zh: GeoReal<T>, zl: GeoReal<T>| {
        gdiv(gsub(hi, lo), gsub(zh, zl)).map_err(|_| {
            GeoError::DegenerateNodes("abscissae too close for a finite divided difference".into())
        })
    };
    let mut columns = vec![col0];
    let mut col1 = Vec::with_capacity(size - 1);
    for i in 0..size - 1 {
        if i % 2 == 0 {
            // z_i = z_{i+1}: the equal-argument rule
            col1.push(data.nodes()[i / 2].dgf);
        } else {
            col1.push(quotient(columns[0][i + 1], columns[0][i], z[i + 1], z[i])?);
        }
    }
    columns.push(col1);
    for c in 2..size {
        let prev = &columns[c - 1];
        let mut col = Vec::with_capacity(size - c);
        for i in 0..size - c {
            col.push(quotient(prev[i + 1], prev[i], z[i + c], z[i])?);
        }
        columns.push(col);
    }
    Ok(DividedDiffTable { z, columns })
}

/// Newton-form bigeometric polynomial: centers `z_i` and coefficients
/// `A_0 = f(x_0)`, `A_k = f_G[z_0, …, z_k]`.
#[derive(Clone, Debug)]
pub struct BigeoPolynomial<T> {
    centers: Vec<GeoReal<T>>,
    coeffs: Vec<GeoReal<T>>,
    geometric_degree: usize,
}

impl<T: GeoFloat> BigeoPolynomial<T> {
    pub fn centers(&self) -> &[GeoReal<T>] {
        &self.centers
    }
    pub fn coeffs(&self) -> &[GeoReal<T>] {
        &self.coeffs
    }
    /// Index of the last coefficient that is not the geometric zero.
    pub fn geometric_degree(&self) -> usize {
        self.geometric_degree
    }
}

/// Reads the Newton coefficients off the table's top diagonal.
pub fn newton_coeffs<T: GeoFloat>(table: &DividedDiffTable<T>) -> BigeoPolynomial<T> {
    let size = table.z().len();
    let coeffs: Vec<GeoReal<T>> = (0..size).map(|c| table.columns[c][0]).collect();
    let centers = table.z()[..size - 1].to_vec();
    let tol = default_log_tolerance::<T>();
    let geometric_degree = coeffs
        .iter()
        .rposition(|a| !a.is_geometric_zero(tol))
        .unwrap_or(0);
    BigeoPolynomial {
        centers,
        coeffs,
        geometric_degree,
    }
}

/// Newton-form evaluation by nested multiplication in the log domain.
pub fn eval_newton<T: GeoFloat>(poly: &BigeoPolynomial<T>, x: GeoReal<T>) -> GeoReal<T> {
    let t = x.log_value();
    let k = poly.coeffs.len() - 1;
    let mut acc = poly.coeffs[k].log_value();
    for j in (0..k).rev() {
        acc = poly.coeffs[j].log_value() + (t - poly.centers[j].log_value()) * acc;
    }
    GeoReal::raw(acc)
}

/// Independent verification path: classical Hermite interpolation of the
/// log-transformed data `(ln x_i, ln f_i, ln D_Gf_i)` by the standard
/// classical divided-difference algorithm, mapped back with `exp`.
pub fn classical_hermite_oracle<T: GeoFloat>(
    data: &HermiteData<T>,
    x: GeoReal<T>,
) -> Result<GeoReal<T>> {
    let n1 = data.len();
    let size = 2 * n1;
    let mut zt = Vec::with_capacity(size);
    let mut dd = Vec::with_capacity(size);
    let mut slope = Vec::with_capacity(n1);
    for node in data.nodes() {
        let t = node.x.log_value();
        let g = node.f.log_value();
        zt.push(t);
        zt.push(t);
        dd.push(g);
        dd.push(g);
        slope.push(node.dgf.log_value());
    }
    // in-place classical Hermite divided differences
    let mut coeffs = vec![T::zero(); size];
    coeffs[0] = dd[0];
    for c in 1..size {
        for i in (c..size).rev() {
            if c == 1 && i % 2 == 1 {
                dd[i] = slope[i / 2];
            } else {
                dd[i] = (dd[i] - dd[i - 1]) / (zt[i] - zt[i - c]);
            }
        }
        coeffs[c] = dd[c];
    }
    let t = x.log_value();
    let mut acc = coeffs[size - 1];
    for j in (0..size - 1).rev() {
        acc = coeffs[j] + (t - zt[j]) * acc;
    }
    GeoReal::from_log(acc)
}
