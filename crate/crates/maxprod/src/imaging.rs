//! Conversions between grayscale images, coefficient grids and fields.
//!
//! Images live on `[0, 1]^2` whatever their aspect ratio: pixel `(col, row)`
//! has its center at `((col + 1/2) / W, (row + 1/2) / H)`. Axis 0 of grids
//! and fields is horizontal.

use maxprod_core::{BoxDomain, CoefficientGrid, IndexSet, ScalarField};

use crate::error::{Error, Result};
use crate::pgm::GrayImage;

/// Cell of the pixel with index `i` out of `len` along one axis:
/// `floor(n (i + 1/2) / len)`, computed exactly in integers.
fn bucket(i: usize, len: usize, n: usize) -> usize {
    (n * (2 * i + 1)) / (2 * len)
}

/// Block means of the pixels whose centers fall in each cell `R_k` of
/// `J_n` on `[0,1]^2`, normalized by `maxval`.
pub fn image_to_coefficients(image: &GrayImage, n: u32) -> Result<CoefficientGrid> {
    let nn = n as usize;
    if n == 0 || nn > image.width().min(image.height()) {
        return Err(Error::Usage(format!(
            "n = {n} must be between 1 and min(width, height) = {} so every cell contains a pixel",
            image.width().min(image.height())
        )));
    }
    let mut sums = vec![0u64; nn * nn];
    let mut counts = vec![0u64; nn * nn];
    for row in 0..image.height() {
        let ky = bucket(row, image.height(), nn);
        for col in 0..image.width() {
            let kx = bucket(col, image.width(), nn);
            sums[kx + nn * ky] += u64::from(image.get(col, row));
            counts[kx + nn * ky] += 1;
        }
    }
    let maxval = f64::from(image.maxval());
    let values = sums
        .iter()
        .zip(&counts)
        .map(|(&s, &c)| s as f64 / c as f64 / maxval)
        .collect();
    let domain = BoxDomain::unit(2);
    let index_set = IndexSet::new(n, &domain)?;
    Ok(CoefficientGrid::from_index_set(values, index_set, domain)?)
}

/// Result of quantizing a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantized {
    pub image: GrayImage,
    /// Number of samples outside `[0, 1]` that were clamped.
    pub clamped: usize,
}

/// `round(clamp(v, 0, 1) * maxval)` per sample, halves rounded up.
pub fn field_to_image(field: &ScalarField, maxval: u16) -> Result<Quantized> {
    let res = field.resolution();
    if res.len() != 2 {
        return Err(Error::Usage(format!(
            "images need a 2-D field, got {} axes",
            res.len()
        )));
    }
    let scale = f64::from(maxval);
    let mut clamped = 0;
    let pixels = field
        .values()
        .iter()
        .map(|&v| {
            if !(0.0..=1.0).contains(&v) {
                clamped += 1;
            }
            (v.clamp(0.0, 1.0) * scale + 0.5).floor() as u16
        })
        .collect();
    let image = GrayImage::new(res[0], res[1], maxval, pixels)?;
    Ok(Quantized { image, clamped })
}
