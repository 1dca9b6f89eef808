//! Binary PGM (`P5`, maxval 255) reading and writing.
//!
//! Output is always the canonical form `P5\n<w> <h>\n255\n<raw>`. Input accepts the
//! usual Netpbm header whitespace and `#` comments, followed by exactly one
//! whitespace byte before the raster.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::image::{GrayImage, BLOCK};

pub fn load(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let data = fs::read(path).map_err(|e| match e.kind() {
        io::ErrorKind::NotFound => Error::NotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })?;
    decode(&data)
}

pub fn save(image: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, encode(image))?;
    Ok(())
}

pub fn write_to(image: &GrayImage, mut w: impl Write) -> Result<()> {
    w.write_all(&encode(image))?;
    Ok(())
}

pub fn encode(image: &GrayImage) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", image.width(), image.height());
    let mut out = Vec::with_capacity(header.len() + image.pixels().len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(image.pixels());
    out
}

pub fn decode(data: &[u8]) -> Result<GrayImage> {
    if data.len() < 2 || &data[..2] != b"P5" {
        return Err(Error::BadMagic);
    }
    let mut cursor = Header { data, pos: 2 };
    let width = cursor.number("width")?;
    let height = cursor.number("height")?;
    let maxval = cursor.number("maxval")?;
    if maxval != 255 {
        return Err(Error::MaxvalNot255(maxval));
    }
    match data.get(cursor.pos) {
        Some(b) if b.is_ascii_whitespace() => cursor.pos += 1,
        _ => return Err(Error::BadHeader("missing separator before raster".into())),
    }
    let (width, height) = (width as usize, height as usize);
    if width == 0 || height == 0 {
        return Err(Error::BadHeader(format!("zero dimension {width}x{height}")));
    }
    let expected = width * height;
    let raster = &data[cursor.pos..];
    if raster.len() < expected {
        return Err(Error::TruncatedData {
            expected,
            found: raster.len(),
        });
    }
    GrayImage::new(width, height, raster[..expected].to_vec())
}

struct Header<'a> {
    data: &'a [u8],
    pos: usize,
}

impl Header<'_> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.data.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(&c) = self.data.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        let before = self.pos;
        self.skip_whitespace_and_comments();
        if self.pos == before {
            return Err(Error::BadHeader(format!(
                "expected whitespace before {what}"
            )));
        }
        let start = self.pos;
        while self.data.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.data[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::BadHeader(format!("invalid {what}")))
    }
}

/// Drops right and bottom edges so both dimensions become multiples of 8.
pub fn crop_to_block(image: &GrayImage) -> Result<GrayImage> {
    let (w, h) = (image.width(), image.height());
    if w < BLOCK || h < BLOCK {
        return Err(Error::TooSmall {
            width: w,
            height: h,
        });
    }
    let (cw, ch) = (w - w % BLOCK, h - h % BLOCK);
    if (cw, ch) == (w, h) {
        return Ok(image.clone());
    }
    GrayImage::from_fn(cw, ch, |x, y| image.get(x, y))
}
