//! Blockwise 8x8 orthonormal DCT-II and embedding-site selection.
//!
//! Coefficients are stored in a plane with the same geometry as the image: the
//! coefficient at vertical frequency `u` and horizontal frequency `v` of block
//! `(block_row, block_col)` sits at row `8*block_row + u`, column `8*block_col + v`.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::image::{GrayImage, BLOCK};

/// Number of coefficients modified per image, one per payload bit.
pub const SITE_COUNT: usize = 56;

/// Zigzag positions eligible for embedding: low-mid band, DC excluded.
pub const BAND: std::ops::RangeInclusive<u8> = 1..=28;

/// JPEG zigzag order: `ZIGZAG[k]` is the natural (row-major) index of the k-th
/// coefficient in the scan.
pub const ZIGZAG: [u8; 64] = [
    0, 1, 8, 16, 9, 2, 3, 10, 17, 24, 32, 25, 18, 11, 4, 5, 12, 19, 26, 33, 40, 48, 41, 34, 27, 20,
    13, 6, 7, 14, 21, 28, 35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51, 58, 59,
    52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63,
];

/// `BASIS[k][n] = c(k) cos((2n + 1) k pi / 16)` with `c(0) = sqrt(1/8)`,
/// `c(k) = sqrt(2/8)` otherwise.
fn basis() -> &'static [[f64; BLOCK]; BLOCK] {
    static BASIS: OnceLock<[[f64; BLOCK]; BLOCK]> = OnceLock::new();
    BASIS.get_or_init(|| {
        let mut m = [[0.0; BLOCK]; BLOCK];
        for (k, row) in m.iter_mut().enumerate() {
            let scale = if k == 0 {
                (1.0 / 8.0f64).sqrt()
            } else {
                (2.0 / 8.0f64).sqrt()
            };
            for (n, v) in row.iter_mut().enumerate() {
                *v = scale * ((2 * n + 1) as f64 * k as f64 * PI / 16.0).cos();
            }
        }
        m
    })
}

pub type Block = [[f64; BLOCK]; BLOCK];

/// Forward transform of one block: `C * X * C^T`.
pub fn dct_block(input: &Block) -> Block {
    let c = basis();
    let mut tmp = [[0.0; BLOCK]; BLOCK];
    // Rows first: tmp[x][v] = sum_y X[x][y] C[v][y]
    for x in 0..BLOCK {
        for v in 0..BLOCK {
            tmp[x][v] = (0..BLOCK).map(|y| input[x][y] * c[v][y]).sum();
        }
    }
    let mut out = [[0.0; BLOCK]; BLOCK];
    for u in 0..BLOCK {
        for v in 0..BLOCK {
            out[u][v] = (0..BLOCK).map(|x| c[u][x] * tmp[x][v]).sum();
        }
    }
    out
}

/// Inverse transform of one block: `C^T * Y * C`.
pub fn idct_block(input: &Block) -> Block {
    let c = basis();
    let mut tmp = [[0.0; BLOCK]; BLOCK];
    for u in 0..BLOCK {
        for y in 0..BLOCK {
            tmp[u][y] = (0..BLOCK).map(|v| input[u][v] * c[v][y]).sum();
        }
    }
    let mut out = [[0.0; BLOCK]; BLOCK];
    for x in 0..BLOCK {
        for y in 0..BLOCK {
            out[x][y] = (0..BLOCK).map(|u| c[u][x] * tmp[u][y]).sum();
        }
    }
    out
}

/// Per-block DCT coefficients of a block-aligned image.
#[derive(Debug, Clone, PartialEq)]
pub struct DctPlane {
    width: usize,
    height: usize,
    coeffs: Vec<f64>,
}

impl DctPlane {
    pub fn from_coefficients(width: usize, height: usize, coeffs: Vec<f64>) -> Result<Self> {
        if width < BLOCK || height < BLOCK {
            return Err(Error::TooSmall { width, height });
        }
        if !width.is_multiple_of(BLOCK) || !height.is_multiple_of(BLOCK) {
            return Err(Error::NotBlockAligned { width, height });
        }
        if coeffs.len() != width * height {
            return Err(Error::DimensionMismatch(format!(
                "{width}x{height} plane needs {} coefficients, got {}",
                width * height,
                coeffs.len()
            )));
        }
        Ok(Self {
            width,
            height,
            coeffs,
        })
    }

    pub fn zeros(width: usize, height: usize) -> Result<Self> {
        Self::from_coefficients(width, height, vec![0.0; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn block_rows(&self) -> usize {
        self.height / BLOCK
    }

    pub fn block_cols(&self) -> usize {
        self.width / BLOCK
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    fn index(&self, block_row: usize, block_col: usize, zigzag_index: u8) -> usize {
        let natural = ZIGZAG[zigzag_index as usize] as usize;
        let (u, v) = (natural / BLOCK, natural % BLOCK);
        (block_row * BLOCK + u) * self.width + block_col * BLOCK + v
    }

    pub fn get(&self, block_row: usize, block_col: usize, zigzag_index: u8) -> f64 {
        self.coeffs[self.index(block_row, block_col, zigzag_index)]
    }

    pub fn set(&mut self, block_row: usize, block_col: usize, zigzag_index: u8, value: f64) {
        let i = self.index(block_row, block_col, zigzag_index);
        self.coeffs[i] = value;
    }

    pub fn block(&self, block_row: usize, block_col: usize) -> Block {
        let mut b = [[0.0; BLOCK]; BLOCK];
        for (u, row) in b.iter_mut().enumerate() {
            let start = (block_row * BLOCK + u) * self.width + block_col * BLOCK;
            row.copy_from_slice(&self.coeffs[start..start + BLOCK]);
        }
        b
    }

    fn set_block(&mut self, block_row: usize, block_col: usize, b: &Block) {
        for (u, row) in b.iter().enumerate() {
            let start = (block_row * BLOCK + u) * self.width + block_col * BLOCK;
            self.coeffs[start..start + BLOCK].copy_from_slice(row);
        }
    }

    pub fn same_dimensions(&self, other: &DctPlane) -> Result<()> {
        if self.width == other.width && self.height == other.height {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{}x{} plane vs {}x{}",
                self.width, self.height, other.width, other.height
            )))
        }
    }
}

fn image_block(image: &GrayImage, block_row: usize, block_col: usize) -> Block {
    let mut b = [[0.0; BLOCK]; BLOCK];
    for (x, row) in b.iter_mut().enumerate() {
        for (y, v) in row.iter_mut().enumerate() {
            *v = image.get(block_col * BLOCK + y, block_row * BLOCK + x) as f64;
        }
    }
    b
}

pub fn forward_dct(image: &GrayImage) -> Result<DctPlane> {
    image.ensure_block_aligned()?;
    let mut plane = DctPlane::zeros(image.width(), image.height())?;
    for br in 0..plane.block_rows() {
        for bc in 0..plane.block_cols() {
            plane.set_block(br, bc, &dct_block(&image_block(image, br, bc)));
        }
    }
    Ok(plane)
}

/// Inverse transform without rounding, row-major pixel intensities.
pub fn inverse_dct_raw(plane: &DctPlane) -> Result<Vec<f64>> {
    if let Some(i) = plane.coeffs.iter().position(|c| !c.is_finite()) {
        return Err(Error::NonFiniteCoefficient(i));
    }
    let mut out = vec![0.0; plane.width * plane.height];
    for br in 0..plane.block_rows() {
        for bc in 0..plane.block_cols() {
            let px = idct_block(&plane.block(br, bc));
            for (x, row) in px.iter().enumerate() {
                let start = (br * BLOCK + x) * plane.width + bc * BLOCK;
                out[start..start + BLOCK].copy_from_slice(row);
            }
        }
    }
    Ok(out)
}

/// Inverse transform, rounded to the nearest integer and clamped to `[0, 255]`.
pub fn inverse_dct(plane: &DctPlane) -> Result<GrayImage> {
    let raw = inverse_dct_raw(plane)?;
    let pixels = raw
        .iter()
        .map(|v| v.round().clamp(0.0, 255.0) as u8)
        .collect();
    GrayImage::new(plane.width, plane.height, pixels)
}

/// One coefficient chosen to carry a payload bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSite {
    pub block_row: usize,
    pub block_col: usize,
    pub zigzag_index: u8,
    /// Coefficient value in the cover plane at selection time.
    pub value: f64,
}

impl CoefficientSite {
    fn key(&self) -> (usize, usize, u8) {
        (self.block_row, self.block_col, self.zigzag_index)
    }
}

/// Descending magnitude, then `(block_row, block_col, zigzag_index)` ascending.
fn site_order(a: &CoefficientSite, b: &CoefficientSite) -> Ordering {
    b.value
        .abs()
        .total_cmp(&a.value.abs())
        .then_with(|| a.key().cmp(&b.key()))
}

/// The ordered embedding sites together with the persistence factor `d` and the
/// eligibility threshold `t` used to pick them.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbedPlan {
    sites: Vec<CoefficientSite>,
    d: f64,
    t: f64,
}

impl EmbedPlan {
    pub fn sites(&self) -> &[CoefficientSite] {
        &self.sites
    }

    pub fn persistence(&self) -> f64 {
        self.d
    }

    pub fn threshold(&self) -> f64 {
        self.t
    }

    /// Same sites, different persistence factor. `d = 0` makes embedding a no-op.
    pub fn with_persistence(&self, d: f64) -> Self {
        Self { d, ..self.clone() }
    }
}

/// Picks the [`SITE_COUNT`] largest band coefficients strictly above `t`, pooled
/// over every block of the plane.
pub fn select_sites(plane: &DctPlane, t: f64, d: f64) -> Result<EmbedPlan> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "threshold must be positive, got {t}"
        )));
    }
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "persistence factor must be positive, got {d}"
        )));
    }

    let mut candidates = Vec::new();
    for block_row in 0..plane.block_rows() {
        for block_col in 0..plane.block_cols() {
            for zigzag_index in BAND {
                let value = plane.get(block_row, block_col, zigzag_index);
                if value > t {
                    candidates.push(CoefficientSite {
                        block_row,
                        block_col,
                        zigzag_index,
                        value,
                    });
                }
            }
        }
    }
    if candidates.len() < SITE_COUNT {
        return Err(Error::InsufficientCapacity {
            found: candidates.len(),
            needed: SITE_COUNT,
        });
    }
    if candidates.len() > SITE_COUNT {
        candidates.select_nth_unstable_by(SITE_COUNT - 1, site_order);
        candidates.truncate(SITE_COUNT);
    }
    candidates.sort_unstable_by(site_order);
    Ok(EmbedPlan {
        sites: candidates,
        d,
        t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Literal double-sum DCT-II, independent of the separable path.
    #[allow(clippy::needless_range_loop)]
    fn direct_dct(input: &Block) -> Block {
        let c = |k: usize| {
            if k == 0 {
                (0.125f64).sqrt()
            } else {
                (0.25f64).sqrt()
            }
        };
        let mut out = [[0.0; 8]; 8];
        for u in 0..8 {
            for v in 0..8 {
                let mut s = 0.0;
                for x in 0..8 {
                    for y in 0..8 {
                        s += input[x][y]
                            * (((2 * x + 1) * u) as f64 * PI / 16.0).cos()
                            * (((2 * y + 1) * v) as f64 * PI / 16.0).cos();
                    }
                }
                out[u][v] = c(u) * c(v) * s;
            }
        }
        out
    }

    #[test]
    fn zigzag_matches_diagonal_walk() {
        let mut walk = Vec::new();
        for s in 0..15usize {
            let cells: Vec<(usize, usize)> = (0..8)
                .filter_map(|r| s.checked_sub(r).filter(|&c| c < 8).map(|c| (r, c)))
                .collect();
            // Even diagonals run bottom-left to top-right.
            if s % 2 == 0 {
                walk.extend(cells.iter().rev().map(|&(r, c)| (r * 8 + c) as u8));
            } else {
                walk.extend(cells.iter().map(|&(r, c)| (r * 8 + c) as u8));
            }
        }
        assert_eq!(walk, ZIGZAG);
    }

    #[test]
    fn constant_block() {
        let img = GrayImage::filled(8, 8, 128).unwrap();
        let plane = forward_dct(&img).unwrap();
        assert!((plane.get(0, 0, 0) - 1024.0).abs() < 1e-9);
        for zz in 1..64 {
            assert!(plane.get(0, 0, zz).abs() < 1e-9);
        }
        assert_eq!(inverse_dct(&plane).unwrap(), img);
    }

    #[test]
    fn impulse_matches_direct_definition() {
        let mut img = GrayImage::filled(8, 8, 0).unwrap();
        img.set(0, 0, 255);
        let plane = forward_dct(&img).unwrap();
        let mut input = [[0.0; 8]; 8];
        input[0][0] = 255.0;
        let expected = direct_dct(&input);
        let got = plane.block(0, 0);
        for u in 0..8 {
            for v in 0..8 {
                assert!((got[u][v] - expected[u][v]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn random_blocks_match_direct_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let input: Block =
                std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(0..=255) as f64));
            let a = dct_block(&input);
            let b = direct_dct(&input);
            for u in 0..8 {
                for v in 0..8 {
                    assert!((a[u][v] - b[u][v]).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn round_trip_random_images() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let img = GrayImage::from_fn(16, 16, |_, _| rng.gen()).unwrap();
            let plane = forward_dct(&img).unwrap();
            let raw = inverse_dct_raw(&plane).unwrap();
            let max_err = raw
                .iter()
                .zip(img.pixels())
                .map(|(r, &p)| (r - p as f64).abs())
                .fold(0.0, f64::max);
            assert!(max_err < 1e-9, "{max_err}");
            assert_eq!(inverse_dct(&plane).unwrap(), img);
        }
    }

    #[test]
    fn parseval_per_block() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let img = GrayImage::from_fn(32, 24, |_, _| rng.gen()).unwrap();
        let plane = forward_dct(&img).unwrap();
        for br in 0..3 {
            for bc in 0..4 {
                let coef: f64 = plane.block(br, bc).iter().flatten().map(|c| c * c).sum();
                let px: f64 = image_block(&img, br, bc)
                    .iter()
                    .flatten()
                    .map(|p| p * p)
                    .sum();
                assert!(((coef - px) / px).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn unaligned_rejected() {
        let img = GrayImage::filled(12, 8, 0).unwrap();
        assert!(matches!(
            forward_dct(&img),
            Err(Error::NotBlockAligned { .. })
        ));
    }

    #[test]
    fn nan_rejected() {
        let mut plane = DctPlane::zeros(8, 8).unwrap();
        plane.set(0, 0, 7, f64::NAN);
        assert!(matches!(
            inverse_dct(&plane),
            Err(Error::NonFiniteCoefficient(_))
        ));
    }

    #[test]
    fn inverse_of_dc_only_plane() {
        let mut plane = DctPlane::zeros(16, 8).unwrap();
        plane.set(0, 0, 0, 1024.0);
        plane.set(0, 1, 0, 1024.0);
        assert_eq!(
            inverse_dct(&plane).unwrap(),
            GrayImage::filled(16, 8, 128).unwrap()
        );
    }

    #[test]
    fn synthetic_plane_selection() {
        // 56 distinct band values 100..=155 scattered over a 64x64 plane; everything
        // else is negative or outside the band.
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut plane = DctPlane::zeros(64, 64).unwrap();
        for br in 0..8 {
            for bc in 0..8 {
                plane.set(br, bc, 0, 900.0);
                for zz in 29..64 {
                    plane.set(br, bc, zz, 500.0);
                }
                for zz in BAND {
                    plane.set(br, bc, zz, -rng.gen_range(1.0..300.0));
                }
            }
        }
        let mut slots: Vec<(usize, usize, u8)> = (0..8)
            .flat_map(|br| (0..8).flat_map(move |bc| BAND.map(move |zz| (br, bc, zz))))
            .collect();
        let mut placed = Vec::new();
        for value in 100..=155 {
            let (br, bc, zz) = slots.swap_remove(rng.gen_range(0..slots.len()));
            plane.set(br, bc, zz, value as f64);
            placed.push((value as f64, br, bc, zz));
        }
        // Sort oracle.
        placed.sort_by(|a, b| b.0.total_cmp(&a.0));

        let plan = select_sites(&plane, 50.0, 25.0).unwrap();
        assert_eq!(plan.sites().len(), SITE_COUNT);
        for (site, &(value, br, bc, zz)) in plan.sites().iter().zip(&placed) {
            assert_eq!(
                (
                    site.value,
                    site.block_row,
                    site.block_col,
                    site.zigzag_index
                ),
                (value, br, bc, zz)
            );
        }
        assert_eq!(plan.sites()[0].value, 155.0);
        assert_eq!(plan.sites()[55].value, 100.0);
        assert_eq!(select_sites(&plane, 50.0, 25.0).unwrap(), plan);
    }

    #[test]
    fn all_zero_has_no_capacity() {
        let plane = forward_dct(&GrayImage::filled(8, 8, 0).unwrap()).unwrap();
        assert!(matches!(
            select_sites(&plane, 60.0, 30.0),
            Err(Error::InsufficientCapacity {
                found: 0,
                needed: 56
            })
        ));
    }

    #[test]
    fn tie_break_order() {
        let mut plane = DctPlane::zeros(16, 64).unwrap();
        plane.set(0, 0, 5, 200.0);
        plane.set(0, 1, 3, 200.0);
        // Filler so there are 56 eligible sites.
        let mut n = 0;
        'outer: for br in 1..8 {
            for bc in 0..2 {
                for zz in BAND {
                    plane.set(br, bc, zz, 100.0 + n as f64 * 0.5);
                    n += 1;
                    if n == 54 {
                        break 'outer;
                    }
                }
            }
        }
        let plan = select_sites(&plane, 60.0, 30.0).unwrap();
        let first: Vec<_> = plan.sites()[..2].iter().map(|s| s.key()).collect();
        assert_eq!(first, vec![(0, 0, 5), (0, 1, 3)]);
    }

    #[test]
    fn selection_rejects_bad_parameters() {
        let plane = DctPlane::zeros(8, 8).unwrap();
        assert!(matches!(
            select_sites(&plane, 0.0, 1.0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            select_sites(&plane, 1.0, -1.0),
            Err(Error::InvalidArgument(_))
        ));
    }
}
