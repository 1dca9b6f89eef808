//! Payload scrambling (Key 2) and the +/-D coefficient rule.
//!
//! The scramble is XOR with key bytes 0..7 followed by a left rotation of the seven
//! bytes by `key[7] % 7`. It is a keyed permutation-substitution, not a cipher:
//! it only hides the septet's letter pattern from someone who recovers the bits.

use std::fmt;
use std::str::FromStr;

use crate::dct::{DctPlane, EmbedPlan, SITE_COUNT};
use crate::error::{Error, Result};
use crate::security::{PayloadSeptet, SEPTET_LEN};

pub const SCRAMBLE_KEY_LEN: usize = 8;

/// 64-bit scramble key ("Key 2").
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct ScrambleKey([u8; SCRAMBLE_KEY_LEN]);

impl ScrambleKey {
    pub const fn new(bytes: [u8; SCRAMBLE_KEY_LEN]) -> Self {
        Self(bytes)
    }

    pub fn as_bytes(&self) -> &[u8; SCRAMBLE_KEY_LEN] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode_upper(self.0)
    }

    fn rotation(&self) -> usize {
        self.0[7] as usize % SEPTET_LEN
    }
}

/// Parses 16 hex characters, either case.
impl FromStr for ScrambleKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::crypto::parse_hex_key::<SCRAMBLE_KEY_LEN>(s, "key2").map(Self)
    }
}

impl fmt::Debug for ScrambleKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ScrambleKey(..)")
    }
}

/// The 56 bits carried by the image; bit `i` goes to plan site `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PayloadBits([bool; SITE_COUNT]);

impl PayloadBits {
    pub const fn new(bits: [bool; SITE_COUNT]) -> Self {
        Self(bits)
    }

    /// MSB-first serialization of seven bytes.
    pub fn from_bytes(bytes: &[u8; SEPTET_LEN]) -> Self {
        Self(std::array::from_fn(|i| {
            (bytes[i / 8] >> (7 - i % 8)) & 1 == 1
        }))
    }

    pub fn to_bytes(&self) -> [u8; SEPTET_LEN] {
        let mut out = [0u8; SEPTET_LEN];
        for (i, &b) in self.0.iter().enumerate() {
            out[i / 8] |= (b as u8) << (7 - i % 8);
        }
        out
    }

    pub fn bits(&self) -> &[bool; SITE_COUNT] {
        &self.0
    }

    pub fn complement(&self) -> Self {
        Self(self.0.map(|b| !b))
    }
}

impl fmt::Debug for PayloadBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PayloadBits({self})")
    }
}

impl fmt::Display for PayloadBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn scramble(septet: &PayloadSeptet, key2: &ScrambleKey) -> PayloadBits {
    let mut bytes = *septet.as_bytes();
    for (b, k) in bytes.iter_mut().zip(key2.0) {
        *b ^= k;
    }
    bytes.rotate_left(key2.rotation());
    PayloadBits::from_bytes(&bytes)
}

/// Inverse of [`scramble`]; a wrong key almost always yields bytes outside `A`-`F`.
pub fn unscramble(bits: &PayloadBits, key2: &ScrambleKey) -> Result<PayloadSeptet> {
    let mut bytes = bits.to_bytes();
    bytes.rotate_right(key2.rotation());
    for (b, k) in bytes.iter_mut().zip(key2.0) {
        *b ^= k;
    }
    PayloadSeptet::new(bytes)
}

/// Adds `d` for a 1 bit and subtracts `d` for a 0 bit at each plan site.
pub fn embed(plane: &DctPlane, plan: &EmbedPlan, bits: &PayloadBits) -> Result<DctPlane> {
    let d = plan.persistence();
    let mut out = plane.clone();
    for (i, (site, &bit)) in plan.sites().iter().zip(bits.bits()).enumerate() {
        if site.block_row >= plane.block_rows() || site.block_col >= plane.block_cols() {
            return Err(Error::PlanPlaneMismatch(i));
        }
        let current = plane.get(site.block_row, site.block_col, site.zigzag_index);
        if current != site.value {
            return Err(Error::PlanPlaneMismatch(i));
        }
        let delta = if bit { d } else { -d };
        out.set(
            site.block_row,
            site.block_col,
            site.zigzag_index,
            current + delta,
        );
    }
    Ok(out)
}

/// Recovered bits plus the sites whose difference was too small to trust.
#[derive(Debug, Clone, PartialEq)]
pub struct Extraction {
    pub bits: PayloadBits,
    /// Plan indices where `|stego - original| < d / 2`.
    pub weak_sites: Vec<usize>,
}

/// Non-blind extraction: bit `i` is 1 iff the stego coefficient exceeds the
/// original at plan site `i`.
pub fn extract(original: &DctPlane, stego: &DctPlane, plan: &EmbedPlan) -> Result<Extraction> {
    original.same_dimensions(stego)?;
    let half = plan.persistence() / 2.0;
    let mut bits = [false; SITE_COUNT];
    let mut weak_sites = Vec::new();
    for (i, site) in plan.sites().iter().enumerate() {
        if site.block_row >= original.block_rows() || site.block_col >= original.block_cols() {
            return Err(Error::DimensionMismatch(format!(
                "plan site {i} lies outside the plane"
            )));
        }
        let diff = stego.get(site.block_row, site.block_col, site.zigzag_index)
            - original.get(site.block_row, site.block_col, site.zigzag_index);
        bits[i] = diff > 0.0;
        if diff.abs() < half {
            weak_sites.push(i);
        }
    }
    Ok(Extraction {
        bits: PayloadBits(bits),
        weak_sites,
    })
}
