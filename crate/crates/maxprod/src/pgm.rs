//! Grayscale images and the Netpbm PGM format (P2 ASCII and P5 binary).
//!
//! Comments (`#` to end of line) are accepted anywhere in the header and in
//! P2 rasters; they are never written. Samples wider than 8 bits are stored
//! big-endian in P5.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PgmError {
    #[error("unsupported format: magic number {0:?}")]
    UnsupportedFormat(String),
    #[error("truncated data: {0}")]
    Truncated(&'static str),
    #[error("invalid header field {field}: {value:?}")]
    InvalidHeader { field: &'static str, value: String },
    #[error("maxval must be in 1..=65535, got {0}")]
    InvalidMaxval(u32),
    #[error("pixel value {value} exceeds maxval {maxval}")]
    PixelOutOfRange { value: u32, maxval: u16 },
    #[error("{width}x{height} image needs {expected} pixels, got {got}")]
    PixelCount {
        width: usize,
        height: usize,
        expected: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PgmFormat {
    /// P2
    Ascii,
    /// P5
    #[default]
    Binary,
}

/// Row-major grayscale raster with samples in `0..=maxval`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    maxval: u16,
    pixels: Vec<u16>,
}

impl GrayImage {
    pub fn new(
        width: usize,
        height: usize,
        maxval: u16,
        pixels: Vec<u16>,
    ) -> std::result::Result<Self, PgmError> {
        if width == 0 || height == 0 {
            return Err(PgmError::InvalidHeader {
                field: "size",
                value: format!("{width}x{height}"),
            });
        }
        if maxval == 0 {
            return Err(PgmError::InvalidMaxval(0));
        }
        if pixels.len() != width * height {
            return Err(PgmError::PixelCount {
                width,
                height,
                expected: width * height,
                got: pixels.len(),
            });
        }
        if let Some(&value) = pixels.iter().find(|&&p| p > maxval) {
            return Err(PgmError::PixelOutOfRange {
                value: value.into(),
                maxval,
            });
        }
        Ok(GrayImage {
            width,
            height,
            maxval,
            pixels,
        })
    }

    pub fn filled(
        width: usize,
        height: usize,
        maxval: u16,
        value: u16,
    ) -> std::result::Result<Self, PgmError> {
        Self::new(width, height, maxval, vec![value; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn maxval(&self) -> u16 {
        self.maxval
    }

    pub fn pixels(&self) -> &[u16] {
        &self.pixels
    }

    pub fn get(&self, col: usize, row: usize) -> u16 {
        self.pixels[row * self.width + col]
    }
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while self.pos < self.data.len() {
            match self.data[self.pos] {
                b'#' => {
                    while self.pos < self.data.len() && self.data[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.pos < self.data.len()
            && !self.data[self.pos].is_ascii_whitespace()
            && self.data[self.pos] != b'#'
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.data[start..self.pos])
    }

    fn number(&mut self, field: &'static str) -> std::result::Result<u32, PgmError> {
        let tok = self
            .token()
            .ok_or(PgmError::Truncated("header ended early"))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse::<u32>().ok())
            .ok_or_else(|| PgmError::InvalidHeader {
                field,
                value: String::from_utf8_lossy(tok).into_owned(),
            })
    }
}

pub fn decode_pgm(data: &[u8]) -> std::result::Result<GrayImage, PgmError> {
    if data.len() < 2 {
        return Err(PgmError::Truncated("missing magic number"));
    }
    let format = match &data[..2] {
        b"P2" => PgmFormat::Ascii,
        b"P5" => PgmFormat::Binary,
        other => {
            return Err(PgmError::UnsupportedFormat(
                String::from_utf8_lossy(other).into_owned(),
            ))
        }
    };
    let mut cur = Cursor { data, pos: 2 };
    let width = cur.number("width")? as usize;
    let height = cur.number("height")? as usize;
    let maxval = cur.number("maxval")?;
    if maxval == 0 || maxval > 65535 {
        return Err(PgmError::InvalidMaxval(maxval));
    }
    if width == 0 || height == 0 {
        return Err(PgmError::InvalidHeader {
            field: "size",
            value: format!("{width}x{height}"),
        });
    }
    let maxval = maxval as u16;
    let count = width.checked_mul(height).ok_or(PgmError::InvalidHeader {
        field: "size",
        value: format!("{width}x{height}"),
    })?;

    let mut pixels = Vec::with_capacity(count);
    match format {
        PgmFormat::Ascii => {
            for _ in 0..count {
                let v = cur.number("pixel").map_err(|e| match e {
                    PgmError::Truncated(_) => PgmError::Truncated("raster ended early"),
                    other => other,
                })?;
                if v > u32::from(maxval) {
                    return Err(PgmError::PixelOutOfRange { value: v, maxval });
                }
                pixels.push(v as u16);
            }
        }
        PgmFormat::Binary => {
            // Exactly one whitespace byte separates maxval from the raster.
            if cur.pos >= data.len() || !data[cur.pos].is_ascii_whitespace() {
                return Err(PgmError::Truncated("missing raster"));
            }
            let raster = &data[cur.pos + 1..];
            let wide = maxval > 255;
            let needed = if wide { count * 2 } else { count };
            if raster.len() < needed {
                return Err(PgmError::Truncated("raster shorter than width*height"));
            }
            for i in 0..count {
                let v = if wide {
                    u16::from_be_bytes([raster[2 * i], raster[2 * i + 1]])
                } else {
                    u16::from(raster[i])
                };
                if v > maxval {
                    return Err(PgmError::PixelOutOfRange {
                        value: v.into(),
                        maxval,
                    });
                }
                pixels.push(v);
            }
        }
    }
    GrayImage::new(width, height, maxval, pixels)
}

/// Values per line in P2 output; keeps lines under 70 characters.
const ASCII_VALUES_PER_LINE: usize = 11;

pub fn encode_pgm(image: &GrayImage, format: PgmFormat) -> Vec<u8> {
    let magic = match format {
        PgmFormat::Ascii => "P2",
        PgmFormat::Binary => "P5",
    };
    let mut out = format!(
        "{magic}\n{} {}\n{}\n",
        image.width, image.height, image.maxval
    )
    .into_bytes();
    match format {
        PgmFormat::Ascii => {
            for row in image.pixels.chunks(image.width) {
                for line in row.chunks(ASCII_VALUES_PER_LINE) {
                    let text: Vec<String> = line.iter().map(u16::to_string).collect();
                    out.extend_from_slice(text.join(" ").as_bytes());
                    out.push(b'\n');
                }
            }
        }
        PgmFormat::Binary => {
            if image.maxval > 255 {
                for p in &image.pixels {
                    out.extend_from_slice(&p.to_be_bytes());
                }
            } else {
                out.extend(image.pixels.iter().map(|&p| p as u8));
            }
        }
    }
    out
}

pub fn load_pgm(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let data = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(decode_pgm(&data)?)
}

pub fn save_pgm(image: &GrayImage, path: impl AsRef<Path>, format: PgmFormat) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, encode_pgm(image, format)).map_err(|e| Error::io(path, e))
}
