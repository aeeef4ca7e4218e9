//! File formats, parallel evaluation and the `maxprod` command line on top of
//! [`maxprod_core`].
//!
//! Inputs are `label,value` CSV series and grayscale PGM images; outputs are
//! CSV tables, PGM images and a JSON manifest per run.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod imaging;
pub mod manifest;
pub mod metrics;
pub mod parallel;
pub mod pgm;
#[cfg(feature = "png")]
pub mod png_io;
pub mod series;

pub use error::{Error, Result};
pub use pgm::{decode_pgm, encode_pgm, load_pgm, save_pgm, GrayImage, PgmError, PgmFormat};
pub use series::{load_series_csv, parse_series_csv, series_to_coefficients, Series, SeriesModel};
