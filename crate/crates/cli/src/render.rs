//! Number formatting and report rendering.
//!
//! Human-readable output uses 10 significant digits by default and the
//! 4-decimal "paper view" on request. Machine CSV blocks always print with
//! Rust's shortest round-trip formatting, so re-parsing reproduces the
//! values bit for bit.

use bigeo::{DividedDiffTable, GeoReal, GrowthDiagnostic, NormReport};

/// Formatting mode for human-readable numbers.
#[derive(Clone, Copy, Debug)]
pub struct ViewMode {
    pub paper_view: bool,
}

impl ViewMode {
    pub fn value(&self, x: f64) -> String {
        if self.paper_view {
            format!("{x:.4}")
        } else {
            fmt_sig(x, 10)
        }
    }

    /// A geometric real as a decimal when representable, `e^log` otherwise.
    pub fn geo(&self, g: GeoReal<f64>) -> String {
        let l = g.log_value();
        if l.abs() <= 700.0 {
            self.value(g.to_positive_real())
        } else {
            format!("e^{}", self.value(l))
        }
    }
}

/// `x` with `sig` significant digits, plain notation where reasonable.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if mag < -4 || mag >= sig as i32 {
        format!("{:.*e}", sig.saturating_sub(1), x)
    } else {
        let decimals = (sig as i32 - 1 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    }
}

/// The interleaved triangular table layout, odd lines carrying the
/// odd-order differences.
pub fn table_human(table: &DividedDiffTable<f64>, view: ViewMode) -> String {
    let z = table.z();
    let size = z.len();
    let width = 14usize;
    let mut out = String::new();
    let mut header = format!("{:>width$} {:>width$}", "z", "f");
    for c in 1..size {
        header.push_str(&format!(" {:>width$}", format!("order {c}")));
    }
    out.push_str(&header);
    out.push('\n');
    // row r of the printed triangle corresponds to half-integer depth r/2
    for r in 0..2 * size - 1 {
        let mut line = String::new();
        if r % 2 == 0 {
            let i = r / 2;
            line.push_str(&format!(
                "{:>width$} {:>width$}",
                view.geo(z[i]),
                view.geo(table.column(0).unwrap()[i])
            ));
        } else {
            line.push_str(&format!("{:>width$} {:>width$}", "", ""));
        }
        for c in 1..size {
            // column c entries sit on printed rows c, c+2, c+4, ...
            if r >= c && (r - c) % 2 == 0 {
                let i = (r - c) / 2;
                if let Ok(col) = table.column(c) {
                    if i < col.len() {
                        line.push_str(&format!(" {:>width$}", view.geo(col[i])));
                        continue;
                    }
                }
            }
            line.push_str(&format!(" {:>width$}", ""));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Machine-readable table block: `column,index,log,value` rows at full
/// precision, preceded by the duplicated abscissae.
pub fn table_machine(table: &DividedDiffTable<f64>) -> String {
    let mut out = String::new();
    out.push_str("# abscissae\nindex,log,value\n");
    for (i, z) in table.z().iter().enumerate() {
        out.push_str(&format!("{i},{},{}\n", z.log_value(), z.to_positive_real()));
    }
    out.push_str("# divided differences\ncolumn,index,log,value\n");
    for c in 0..table.column_count() {
        for (i, entry) in table.column(c).unwrap().iter().enumerate() {
            out.push_str(&format!(
                "{c},{i},{},{}\n",
                entry.log_value(),
                entry.to_positive_real()
            ));
        }
    }
    out
}

/// Re-parses a [`table_machine`] block into `(column, index, log)` triples.
pub fn parse_table_machine(text: &str) -> Vec<(usize, usize, f64)> {
    let mut out = Vec::new();
    let mut in_dd = false;
    for line in text.lines() {
        if line.starts_with("# divided differences") {
            in_dd = true;
            continue;
        }
        if line.starts_with('#') || line.starts_with("column") || line.starts_with("index") {
            continue;
        }
        if !in_dd {
            continue;
        }
        let mut parts = line.split(',');
        if let (Some(c), Some(i), Some(l)) = (parts.next(), parts.next(), parts.next()) {
            if let (Ok(c), Ok(i), Ok(l)) = (c.parse(), i.parse(), l.parse()) {
                out.push((c, i, l));
            }
        }
    }
    out
}

pub fn norm_report(r: &NormReport<f64>, m: usize, view: ViewMode) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "norm report (m = {m}, p = {}, truncation N = {})\n",
        r.p(),
        r.truncation()
    ));
    for (name, g) in [
        ("head", r.head_term()),
        ("tail", r.tail_term()),
        ("total", r.total()),
    ] {
        out.push_str(&format!(
            "  {name:<6} = {:<18} (log {})\n",
            view.geo(g),
            view.value(g.log_value())
        ));
    }
    out.push_str("quantity,log,value\n");
    for (name, g) in [
        ("head", r.head_term()),
        ("tail", r.tail_term()),
        ("total", r.total()),
    ] {
        out.push_str(&format!(
            "{name},{},{}\n",
            g.log_value(),
            g.to_positive_real()
        ));
    }
    out
}

pub fn growth_report(d: &GrowthDiagnostic<f64>, label: &str, view: ViewMode) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{label}: classification = {}, fitted slope = {}\n",
        d.classification(),
        view.value(d.fitted_slope())
    ));
    out.push_str(&format!(
        "final partial log-sum = {} over {} points\n",
        view.value(d.final_log()),
        d.partial_log_sums().len()
    ));
    out.push_str(&format!("# fitted_slope={}\n", d.fitted_slope()));
    out.push_str(&format!("# classification={}\n", d.classification()));
    out.push_str("n,partial_log_sum\n");
    for &(n, s) in d.partial_log_sums() {
        out.push_str(&format!("{n},{s}\n"));
    }
    out
}
