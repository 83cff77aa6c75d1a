//! File ingestion: node records (CSV or JSON), matrix files, sequence files.
//!
//! Node CSV carries a header `x,f[,fprime][,dgf]`, decimal-point reals, and
//! `#` comment lines. The JSON alternative is an array of objects with the
//! same field names. A record may supply `fprime` or `dgf`, never both.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use bigeo::{DerivativeSpec, GeoMatrix, GeoReal, GeoSequence};
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeRecord {
    pub x: f64,
    pub f: f64,
    #[serde(default)]
    pub fprime: Option<f64>,
    #[serde(default)]
    pub dgf: Option<f64>,
}

impl NodeRecord {
    fn validate(&self, row: usize) -> Result<(), CliError> {
        if self.x <= 0.0 || !self.x.is_finite() {
            return Err(CliError::Parse(format!(
                "node {row}: abscissa x = {} must be a positive real",
                self.x
            )));
        }
        if self.f <= 0.0 || !self.f.is_finite() {
            return Err(CliError::Parse(format!(
                "node {row}: value f = {} must be a positive real",
                self.f
            )));
        }
        if self.fprime.is_some() && self.dgf.is_some() {
            return Err(CliError::Parse(format!(
                "node {row}: supply fprime or dgf, not both"
            )));
        }
        Ok(())
    }

    /// The derivative information, honoring the dgf-over-fprime precedence.
    pub fn derivative_spec(&self, row: usize) -> Result<DerivativeSpec<f64>, CliError> {
        if let Some(d) = self.dgf {
            return Ok(DerivativeSpec::Bigeometric(d));
        }
        if let Some(fp) = self.fprime {
            return Ok(DerivativeSpec::Classical(fp));
        }
        Err(CliError::Parse(format!(
            "node {row}: needs a derivative (fprime or dgf column)"
        )))
    }
}

pub fn read_nodes(path: &Path) -> Result<Vec<NodeRecord>, CliError> {
    let mut text = String::new();
    File::open(path)
        .map_err(|e| CliError::Parse(format!("cannot open {}: {e}", path.display())))?
        .read_to_string(&mut text)?;
    let records = if looks_like_json(path, &text) {
        serde_json::from_str::<Vec<NodeRecord>>(&text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?
    } else {
        parse_nodes_csv(&text)?
    };
    if records.is_empty() {
        return Err(CliError::Parse(format!(
            "{}: no node records found",
            path.display()
        )));
    }
    for (i, r) in records.iter().enumerate() {
        r.validate(i + 1)?;
    }
    Ok(records)
}

fn looks_like_json(path: &Path, text: &str) -> bool {
    path.extension().map(|e| e == "json").unwrap_or(false) || text.trim_start().starts_with('[')
}

fn parse_nodes_csv(text: &str) -> Result<Vec<NodeRecord>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::Parse(format!("bad CSV header: {e}")))?
        .clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let (x_col, f_col) = match (col("x"), col("f")) {
        (Some(x), Some(f)) => (x, f),
        _ => {
            return Err(CliError::Parse(
                "node CSV must have a header with `x` and `f` columns".into(),
            ))
        }
    };
    let fprime_col = col("fprime");
    let dgf_col = col("dgf");
    let mut out = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Parse(format!("row {}: {e}", i + 2)))?;
        if record.iter().all(|f| f.is_empty()) {
            continue;
        }
        let field = |idx: usize| -> Result<f64, CliError> {
            record
                .get(idx)
                .ok_or_else(|| CliError::Parse(format!("row {}: missing column {idx}", i + 2)))?
                .parse()
                .map_err(|e| CliError::Parse(format!("row {}: {e}", i + 2)))
        };
        let optional = |idx: Option<usize>| -> Result<Option<f64>, CliError> {
            match idx.and_then(|c| record.get(c)).filter(|s| !s.is_empty()) {
                Some(s) => s
                    .parse()
                    .map(Some)
                    .map_err(|e| CliError::Parse(format!("row {}: {e}", i + 2))),
                None => Ok(None),
            }
        };
        out.push(NodeRecord {
            x: field(x_col)?,
            f: field(f_col)?,
            fprime: optional(fprime_col)?,
            dgf: optional(dgf_col)?,
        });
    }
    Ok(out)
}

/// Reads a matrix of positive reals: one CSV row per matrix row, `#`
/// comments and blank lines skipped.
pub fn read_matrix(path: &Path) -> Result<GeoMatrix<f64>, CliError> {
    let mut text = String::new();
    File::open(path)
        .map_err(|e| CliError::Parse(format!("cannot open {}: {e}", path.display())))?
        .read_to_string(&mut text)?;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(|tok| parse_positive(tok.trim(), lineno + 1, path))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse(format!(
            "{}: no matrix rows found",
            path.display()
        )));
    }
    Ok(GeoMatrix::from_rows(rows)?)
}

/// Reads a sequence of positive reals, separated by commas and/or newlines.
pub fn read_sequence(path: &Path) -> Result<GeoSequence<f64>, CliError> {
    let mut text = String::new();
    File::open(path)
        .map_err(|e| CliError::Parse(format!("cannot open {}: {e}", path.display())))?
        .read_to_string(&mut text)?;
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line.split([',', ' ', '\t']).filter(|t| !t.is_empty()) {
            terms.push(parse_positive(tok, lineno + 1, path)?);
        }
    }
    if terms.is_empty() {
        return Err(CliError::Parse(format!(
            "{}: no sequence terms found",
            path.display()
        )));
    }
    Ok(GeoSequence::from_terms(terms))
}

fn parse_positive(tok: &str, lineno: usize, path: &Path) -> Result<GeoReal<f64>, CliError> {
    let v: f64 = tok
        .parse()
        .map_err(|e| CliError::Parse(format!("{} line {lineno}: `{tok}`: {e}", path.display())))?;
    GeoReal::from_positive_real(v).map_err(|_| {
        CliError::Parse(format!(
            "{} line {lineno}: {v} is not a positive real",
            path.display()
        ))
    })
}

/// Parses `A:B:STEP` into an inclusive grid.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Parse(format!(
            "grid `{spec}` must have the form A:B:STEP"
        )));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|e| CliError::Parse(format!("grid `{spec}`: {e}")))
        })
        .collect::<Result<_, _>>()?;
    let (a, b, step) = (nums[0], nums[1], nums[2]);
    if step <= 0.0 || b < a {
        return Err(CliError::Parse(format!(
            "grid `{spec}` needs A ≤ B and STEP > 0"
        )));
    }
    let mut out = Vec::new();
    let mut i = 0usize;
    loop {
        let x = a + step * i as f64;
        if x > b + step * 1e-9 {
            break;
        }
        out.push(x);
        i += 1;
    }
    Ok(out)
}

/// Parses a comma-separated list of evaluation points.
pub fn parse_at(spec: &str) -> Result<Vec<f64>, CliError> {
    spec.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|e| CliError::Parse(format!("evaluation point `{tok}`: {e}")))
        })
        .collect()
}
