//! Labelled data series read from `label,value` CSV files.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use maxprod_core::{BoxDomain, CoefficientGrid, IndexSet};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    labels: Vec<String>,
    values: Vec<f64>,
}

impl Series {
    pub fn new(labels: Vec<String>, values: Vec<f64>) -> Result<Self> {
        if labels.len() != values.len() {
            return Err(Error::MalformedInput(format!(
                "{} labels but {} values",
                labels.len(),
                values.len()
            )));
        }
        if values.len() < 2 {
            return Err(Error::MalformedInput(format!(
                "a series needs at least 2 entries, got {}",
                values.len()
            )));
        }
        Ok(Series { labels, values })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn load_series_csv(path: impl AsRef<Path>) -> Result<Series> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_series_csv(file)
}

/// Parses `label,value` rows. The first row is taken as a header when its
/// second field is not a number.
pub fn parse_series_csv<R: Read>(reader: R) -> Result<Series> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut labels = Vec::new();
    let mut values = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            Error::MalformedRow {
                line,
                message: e.to_string(),
            }
        })?;
        let line = record.position().map_or(i as u64 + 1, |p| p.line());
        if record.len() != 2 {
            return Err(Error::MalformedRow {
                line,
                message: format!("expected 2 fields (label,value), found {}", record.len()),
            });
        }
        match record[1].parse::<f64>() {
            Ok(v) if v.is_finite() => {
                labels.push(record[0].to_string());
                values.push(v);
            }
            Ok(v) => {
                return Err(Error::MalformedRow {
                    line,
                    message: format!("non-finite value {v}"),
                });
            }
            Err(_) if i == 0 => {}
            Err(_) => {
                return Err(Error::MalformedRow {
                    line,
                    message: format!("value {:?} is not a number", &record[1]),
                });
            }
        }
    }
    if values.is_empty() {
        return Err(Error::MalformedInput("no data rows".into()));
    }
    Series::new(labels, values)
}

/// A series mapped onto the unit interval with `n = len - 1`.
#[derive(Debug, Clone)]
pub struct SeriesModel {
    pub grid: CoefficientGrid,
    pub include_endpoint: bool,
    /// Datum left out of the coefficient set (the last one) in default mode.
    pub unused: Option<(String, f64)>,
}

/// Injects the data as Kantorovich means on `[0, 1]`, datum `k` at node `k/n`.
///
/// By default only `k = 0..n-1` form the index set and the last datum is
/// reported unused. With `include_endpoint` the lattice is extended to
/// `k = n` so every datum enters.
pub fn series_to_coefficients(series: &Series, include_endpoint: bool) -> Result<SeriesModel> {
    let m = series.len();
    if m < 2 {
        return Err(Error::MalformedInput(format!(
            "need at least 2 data, got {m}"
        )));
    }
    let n = u32::try_from(m - 1).map_err(|_| Error::MalformedInput("series too long".into()))?;
    let domain = BoxDomain::unit(1);
    let base = IndexSet::new(n, &domain)?;
    if include_endpoint {
        let grid =
            CoefficientGrid::from_index_set(series.values().to_vec(), base.extend_upper(), domain)?;
        Ok(SeriesModel {
            grid,
            include_endpoint,
            unused: None,
        })
    } else {
        let grid =
            CoefficientGrid::from_index_set(series.values()[..m - 1].to_vec(), base, domain)?;
        let unused = Some((series.labels()[m - 1].clone(), series.values()[m - 1]));
        Ok(SeriesModel {
            grid,
            include_endpoint,
            unused,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Series> {
        parse_series_csv(text.as_bytes())
    }

    #[test]
    fn fourteen_years() {
        let text: String = (2004..=2017)
            .map(|y| format!("{y},{}\n", y - 2000))
            .collect();
        let s = parse(&text).unwrap();
        assert_eq!(s.len(), 14);
        assert_eq!(s.labels()[0], "2004");
        assert_eq!(s.values()[13], 17.0);
    }

    #[test]
    fn header_is_skipped() {
        let s = parse("year,population\n2004,1.5\n2005,2.5\n").unwrap();
        assert_eq!(s.values(), &[1.5, 2.5]);
    }

    #[test]
    fn empty_file_is_malformed() {
        assert!(matches!(parse(""), Err(Error::MalformedInput(_))));
        assert!(matches!(
            parse("year,value\n"),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn bad_value_reports_line() {
        match parse("2008,1\n2009,2\n2010,abc\n") {
            Err(Error::MalformedRow { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse("2008,1\n2009,2,3\n") {
            Err(Error::MalformedRow { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn single_row_is_too_short() {
        assert!(parse("2004,1\n").is_err());
    }

    #[test]
    fn default_mode_drops_last_datum() {
        let s = Series::new(
            (0..14).map(|i| i.to_string()).collect(),
            (0..14).map(f64::from).collect(),
        )
        .unwrap();
        let model = series_to_coefficients(&s, false).unwrap();
        assert_eq!(model.grid.n(), 13);
        assert_eq!(model.grid.values().len(), 13);
        assert_eq!(model.unused, Some(("13".to_string(), 13.0)));
        let model = series_to_coefficients(&s, true).unwrap();
        assert_eq!(model.grid.values().len(), 14);
        assert!(model.unused.is_none());
    }

    #[test]
    fn minimal_and_negative_series() {
        let s = Series::new(vec!["a".into(), "b".into()], vec![3.0, -1.0]).unwrap();
        let model = series_to_coefficients(&s, false).unwrap();
        assert_eq!(model.grid.n(), 1);
        assert_eq!(model.grid.values(), &[3.0]);
        let model = series_to_coefficients(&s, true).unwrap();
        assert_eq!(model.grid.shift(), 1.0);
        assert_eq!(model.grid.values(), &[4.0, 0.0]);
    }
}
