//! Deterministic synthetic cover images for tests, examples, and calibration.
//!
//! [`textured`] mimics a natural photograph: smooth illumination, objects with
//! edges of varying sharpness, periodic texture and sensor-like grain, with a soft
//! tonal knee so few pixels sit at 0 or 255. [`noise`] draws
//! every pixel uniformly from `0..=255`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::image::GrayImage;

pub fn textured(width: usize, height: usize, seed: u64) -> GrayImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (w, h) = (width as f64, height as f64);

    let gx = rng.gen_range(-60.0..60.0);
    let gy = rng.gen_range(-60.0..60.0);
    let base = rng.gen_range(100.0..150.0);

    let blobs: Vec<(f64, f64, f64, f64, f64)> = (0..rng.gen_range(24..40))
        .map(|_| {
            (
                rng.gen_range(0.0..w),
                rng.gen_range(0.0..h),
                rng.gen_range(0.02..0.2) * w.min(h),
                rng.gen_range(-90.0..90.0),
                rng.gen_range(0.6..3.0),
            )
        })
        .collect();
    let waves: Vec<(f64, f64, f64, f64)> = (0..3)
        .map(|_| {
            let angle = rng.gen_range(0.0..PI);
            let period = rng.gen_range(5.0..32.0);
            (
                angle.cos() * 2.0 * PI / period,
                angle.sin() * 2.0 * PI / period,
                rng.gen_range(0.0..2.0 * PI),
                rng.gen_range(8.0..24.0),
            )
        })
        .collect();

    let mut grain = ChaCha8Rng::seed_from_u64(seed ^ 0x9E37_79B9_7F4A_7C15);
    GrayImage::from_fn(width, height, |x, y| {
        let (fx, fy) = (x as f64, y as f64);
        let mut v = base + gx * (fx / w - 0.5) + gy * (fy / h - 0.5);
        for &(cx, cy, r, amp, edge) in &blobs {
            let dist = ((fx - cx).powi(2) + (fy - cy).powi(2)).sqrt();
            // Disc with a logistic edge profile.
            v += amp / (1.0 + ((dist - r) / edge).exp());
        }
        for &(kx, ky, phase, amp) in &waves {
            v += amp * (kx * fx + ky * fy + phase).sin();
        }
        v += grain.gen_range(-6.0..6.0);
        // Soft knee keeps highlights and shadows off the 0/255 rails.
        let v = 128.0 + 112.0 * ((v - 128.0) / 112.0).tanh();
        v.round().clamp(0.0, 255.0) as u8
    })
    .expect("non-zero dimensions")
}

pub fn noise(width: usize, height: usize, seed: u64) -> GrayImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    GrayImage::from_fn(width, height, |_, _| rng.gen()).expect("non-zero dimensions")
}

/// The standard evaluation set: five 512x512 textured covers followed by twenty
/// 512x512 noise covers.
pub fn corpus() -> Vec<(String, GrayImage)> {
    let mut out: Vec<(String, GrayImage)> = (0..5)
        .map(|i| (format!("textured-{i}"), textured(512, 512, 1000 + i)))
        .collect();
    out.extend((0..20).map(|i| (format!("noise-{i:02}"), noise(512, 512, 2000 + i))));
    out
}
