//! Image quality (MSE/PSNR) and payload fidelity (BER).

use std::fmt;

use crate::codec::PayloadBits;
use crate::error::{Error, Result};
use crate::image::GrayImage;

const PEAK: f64 = 255.0;

/// PSNR in decibels; identical images have no finite PSNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Psnr {
    Finite(f64),
    Infinite,
}

impl Psnr {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Psnr::Infinite)
    }

    /// Whether the PSNR is at least `db`; infinite PSNR satisfies every bound.
    pub fn at_least(&self, db: f64) -> bool {
        match *self {
            Psnr::Finite(v) => v >= db,
            Psnr::Infinite => true,
        }
    }
}

impl fmt::Display for Psnr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Psnr::Finite(v) => write!(f, "{v:.4}"),
            Psnr::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QualityReport {
    pub mse: f64,
    pub psnr_db: Psnr,
    pub changed_pixels: usize,
}

impl fmt::Display for QualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MSE={:.6} PSNR_DB={} CHANGED={}",
            self.mse, self.psnr_db, self.changed_pixels
        )
    }
}

pub fn psnr(a: &GrayImage, b: &GrayImage) -> Result<QualityReport> {
    a.same_dimensions(b)?;
    let (mut sum_sq, mut changed) = (0u64, 0usize);
    for (&x, &y) in a.pixels().iter().zip(b.pixels()) {
        let d = x.abs_diff(y) as u64;
        sum_sq += d * d;
        changed += (d != 0) as usize;
    }
    let mse = sum_sq as f64 / a.pixels().len() as f64;
    let psnr_db = if sum_sq == 0 {
        Psnr::Infinite
    } else {
        Psnr::Finite(10.0 * (PEAK * PEAK / mse).log10())
    };
    Ok(QualityReport {
        mse,
        psnr_db,
        changed_pixels: changed,
    })
}

/// Fraction of differing bits. Both streams must be full payloads.
pub fn ber(sent: &PayloadBits, received: &PayloadBits) -> f64 {
    bit_error_rate(sent.bits(), received.bits()).expect("payloads have equal length")
}

/// Hamming distance over length for arbitrary bit slices.
pub fn bit_error_rate(sent: &[bool], received: &[bool]) -> Result<f64> {
    if sent.len() != received.len() || sent.is_empty() {
        return Err(Error::LengthMismatch(format!(
            "bit streams of length {} and {}",
            sent.len(),
            received.len()
        )));
    }
    let errors = sent.iter().zip(received).filter(|(a, b)| a != b).count();
    Ok(errors as f64 / sent.len() as f64)
}
