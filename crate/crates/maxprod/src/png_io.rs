//! 8- and 16-bit grayscale PNG, enabled by the `png` feature.

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use crate::error::{Error, Result};
use crate::pgm::GrayImage;

pub fn load_png(path: &Path) -> Result<GrayImage> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = png::Decoder::new(file)
        .read_info()
        .map_err(|e| Error::Png(e.to_string()))?;
    let mut buf = vec![0; reader.output_buffer_size()];
    let info = reader
        .next_frame(&mut buf)
        .map_err(|e| Error::Png(e.to_string()))?;
    if info.color_type != png::ColorType::Grayscale {
        return Err(Error::Png(format!(
            "expected grayscale, got {:?}",
            info.color_type
        )));
    }
    let (w, h) = (info.width as usize, info.height as usize);
    let (maxval, pixels) = match info.bit_depth {
        png::BitDepth::Eight => (255, buf[..w * h].iter().map(|&b| u16::from(b)).collect()),
        png::BitDepth::Sixteen => (
            u16::MAX,
            buf[..2 * w * h]
                .chunks_exact(2)
                .map(|c| u16::from_be_bytes([c[0], c[1]]))
                .collect(),
        ),
        other => return Err(Error::Png(format!("unsupported bit depth {other:?}"))),
    };
    Ok(GrayImage::new(w, h, maxval, pixels)?)
}

/// Samples are rescaled to the full 8- or 16-bit range.
pub fn save_png(image: &GrayImage, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut enc = png::Encoder::new(
        BufWriter::new(file),
        image.width() as u32,
        image.height() as u32,
    );
    enc.set_color(png::ColorType::Grayscale);
    let max = u32::from(image.maxval());
    let scale = |p: u16, full: u32| ((u32::from(p) * full + max / 2) / max) as u16;
    let data: Vec<u8> = if image.maxval() <= 255 {
        enc.set_depth(png::BitDepth::Eight);
        image
            .pixels()
            .iter()
            .map(|&p| scale(p, 255) as u8)
            .collect()
    } else {
        enc.set_depth(png::BitDepth::Sixteen);
        image
            .pixels()
            .iter()
            .flat_map(|&p| scale(p, 65535).to_be_bytes())
            .collect()
    };
    let mut writer = enc.write_header().map_err(|e| Error::Png(e.to_string()))?;
    writer
        .write_image_data(&data)
        .map_err(|e| Error::Png(e.to_string()))
}
