//! Error metrics selectable on the command line and the error-table CSV.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use maxprod_core::{lp_error, modular, sup_error, PhiFunction, ScalarField};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    Sup,
    Lp(f64),
    /// `I^phi[lambda (K_n f - f)]`, evaluated for every requested lambda.
    Modular(PhiFunction),
}

impl Metric {
    pub fn uses_lambda(&self) -> bool {
        matches!(self, Metric::Modular(_))
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Metric::Sup => f.write_str("sup"),
            Metric::Lp(1.0) => f.write_str("l1"),
            Metric::Lp(2.0) => f.write_str("l2"),
            Metric::Lp(p) => write!(f, "lp:{p}"),
            Metric::Modular(PhiFunction::Power { p }) => write!(f, "power:{p}"),
            Metric::Modular(PhiFunction::Zygmund { alpha, beta }) => {
                write!(f, "zygmund:{alpha}:{beta}")
            }
            Metric::Modular(PhiFunction::Exponential { gamma }) => write!(f, "exp:{gamma}"),
        }
    }
}

impl FromStr for Metric {
    type Err = String;

    /// `sup`, `l1`, `l2`, `lp:P`, `power:P`, `zygmund:A:B`, `exp:G`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| {
            t.parse::<f64>()
                .map_err(|_| format!("bad number {t:?} in metric {s:?}"))
        };
        let metric = match parts.as_slice() {
            ["sup"] => Metric::Sup,
            ["l1"] => Metric::Lp(1.0),
            ["l2"] => Metric::Lp(2.0),
            ["lp", p] => {
                let p = num(p)?;
                if !(p >= 1.0 && p.is_finite()) {
                    return Err(format!("lp exponent must be >= 1, got {p}"));
                }
                Metric::Lp(p)
            }
            ["power", p] => {
                Metric::Modular(PhiFunction::power(num(p)?).map_err(|e| e.to_string())?)
            }
            ["zygmund", a, b] => {
                Metric::Modular(PhiFunction::zygmund(num(a)?, num(b)?).map_err(|e| e.to_string())?)
            }
            ["exp", g] => {
                Metric::Modular(PhiFunction::exponential(num(g)?).map_err(|e| e.to_string())?)
            }
            _ => {
                return Err(format!(
                "unknown metric {s:?}; expected sup, l1, l2, lp:P, power:P, zygmund:A:B or exp:G"
            ))
            }
        };
        Ok(metric)
    }
}

/// One line of the error table.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub n: u32,
    pub kernel: String,
    pub metric: String,
    pub lambda: Option<f64>,
    pub value: f64,
}

/// Evaluates every metric between `approx` and `exact`; modular metrics are
/// expanded over `lambdas`.
pub fn error_rows(
    n: u32,
    kernel: &str,
    approx: &ScalarField,
    exact: &ScalarField,
    metrics: &[Metric],
    lambdas: &[f64],
) -> Result<Vec<ErrorRow>> {
    let mut rows = Vec::new();
    let diff = approx.difference(exact)?;
    for metric in metrics {
        let mut push = |lambda: Option<f64>, value: f64| {
            rows.push(ErrorRow {
                n,
                kernel: kernel.to_string(),
                metric: metric.to_string(),
                lambda,
                value,
            })
        };
        match *metric {
            Metric::Sup => push(None, sup_error(approx, exact)?),
            Metric::Lp(p) => push(None, lp_error(p, approx, exact)?),
            Metric::Modular(phi) => {
                for &lambda in lambdas {
                    push(Some(lambda), modular(&phi, &diff, lambda)?.value);
                }
            }
        }
    }
    Ok(rows)
}

/// Floats with 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_error_table(path: &Path, rows: &[ErrorRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::MalformedInput(e.to_string()))?;
    let io = |e: csv::Error| Error::MalformedInput(format!("{}: {e}", path.display()));
    w.write_record(["n", "kernel", "metric", "lambda", "value"])
        .map_err(io)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.kernel.clone(),
            r.metric.clone(),
            r.lambda.map(|l| l.to_string()).unwrap_or_default(),
            fmt_f64(r.value),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Writes a CSV with a header and float columns.
pub fn write_float_table(
    path: &Path,
    header: &[&str],
    rows: impl Iterator<Item = Vec<f64>>,
) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = std::io::BufWriter::new(file);
    let io = |e| Error::io(path, e);
    writeln!(out, "{}", header.join(",")).map_err(io)?;
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(fmt_f64).collect();
        writeln!(out, "{}", cells.join(",")).map_err(io)?;
    }
    out.flush().map_err(io)
}
