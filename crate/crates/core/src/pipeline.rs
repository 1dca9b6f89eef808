//! End-to-end hide and reveal.
//!
//! Hiding: encrypt -> split -> scramble -> forward DCT -> select sites -> embed ->
//! inverse DCT. Revealing runs the reverse order and needs the untouched cover,
//! since the embedding sites are recomputed from it and bits are read from the
//! coefficient differences.

use crate::codec::{self, PayloadBits, ScrambleKey};
use crate::crypto::{self, AesKey128, PlaintextMessage};
use crate::dct::{self, EmbedPlan};
use crate::error::{PipelineError, Stage, StageExt};
use crate::image::GrayImage;
use crate::keyfile::{validate_params, KeyFile};
use crate::metrics::{self, QualityReport};
use crate::security;

pub type Result<T> = std::result::Result<T, PipelineError>;

pub const DEFAULT_PERSISTENCE: f64 = 30.0;
pub const DEFAULT_THRESHOLD: f64 = 60.0;

/// Persistence factor `d` and eligibility threshold `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbedParams {
    pub d: f64,
    pub t: f64,
}

impl EmbedParams {
    /// `t` defaults to `2d`, which keeps a coefficient positive after subtraction.
    pub fn with_persistence(d: f64) -> Self {
        Self { d, t: 2.0 * d }
    }
}

impl Default for EmbedParams {
    fn default() -> Self {
        Self {
            d: DEFAULT_PERSISTENCE,
            t: DEFAULT_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HideResult {
    pub stego: GrayImage,
    pub keyfile: KeyFile,
    pub quality: QualityReport,
    pub plan: EmbedPlan,
    /// Scrambled bits written to the plan sites.
    pub payload: PayloadBits,
}

pub fn hide_message(
    plaintext: &PlaintextMessage,
    cover: &GrayImage,
    key1: &AesKey128,
    key2: &ScrambleKey,
    params: EmbedParams,
) -> Result<HideResult> {
    validate_params(params.d, params.t).stage(Stage::SelectSites)?;

    let cipher = crypto::encrypt(plaintext, key1);
    let (septet, key3, key4) = security::split(&cipher);
    let payload = codec::scramble(&septet, key2);

    let plane = dct::forward_dct(cover).stage(Stage::ForwardDct)?;
    let plan = dct::select_sites(&plane, params.t, params.d).stage(Stage::SelectSites)?;
    let embedded = codec::embed(&plane, &plan, &payload).stage(Stage::Embed)?;
    let stego = dct::inverse_dct(&embedded).stage(Stage::InverseDct)?;
    let quality = metrics::psnr(cover, &stego).stage(Stage::InverseDct)?;

    let keyfile = KeyFile {
        key3,
        key4,
        d: params.d,
        t: params.t,
    };
    Ok(HideResult {
        stego,
        keyfile,
        quality,
        plan,
        payload,
    })
}

#[derive(Debug, Clone)]
pub struct Revealed {
    pub plaintext: PlaintextMessage,
    /// Plan indices whose coefficient difference fell below `d / 2`.
    pub weak_sites: Vec<usize>,
}

pub fn reveal_message(
    stego: &GrayImage,
    cover: &GrayImage,
    key1: &AesKey128,
    key2: &ScrambleKey,
    keyfile: &KeyFile,
) -> Result<PlaintextMessage> {
    reveal_message_detailed(stego, cover, key1, key2, keyfile).map(|r| r.plaintext)
}

pub fn reveal_message_detailed(
    stego: &GrayImage,
    cover: &GrayImage,
    key1: &AesKey128,
    key2: &ScrambleKey,
    keyfile: &KeyFile,
) -> Result<Revealed> {
    stego.same_dimensions(cover).stage(Stage::ForwardDct)?;
    let original = dct::forward_dct(cover).stage(Stage::ForwardDct)?;
    let received = dct::forward_dct(stego).stage(Stage::ForwardDct)?;
    let plan = dct::select_sites(&original, keyfile.t, keyfile.d).stage(Stage::SelectSites)?;

    let extraction = codec::extract(&original, &received, &plan).stage(Stage::Extract)?;
    let septet = codec::unscramble(&extraction.bits, key2).stage(Stage::Unscramble)?;
    let cipher = security::merge(&septet, &keyfile.key3, &keyfile.key4).stage(Stage::Merge)?;
    let plaintext = crypto::decrypt(&cipher, key1).stage(Stage::Decrypt)?;
    Ok(Revealed {
        plaintext,
        weak_sites: extraction.weak_sites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers;
    use crate::error::{Error, ErrorKind};
    use crate::image::BLOCK;

    fn keys() -> (AesKey128, ScrambleKey) {
        (
            AesKey128::new(*b"sixteen byte key"),
            ScrambleKey::new(*b"8bytekey"),
        )
    }

    #[test]
    fn round_trip_small_cover() {
        let cover = covers::textured(128, 128, 1);
        let (k1, k2) = keys();
        let m = PlaintextMessage::new(*b"meet at noon").unwrap();
        let hidden = hide_message(&m, &cover, &k1, &k2, EmbedParams::default()).unwrap();
        assert_eq!(hidden.stego.width(), cover.width());
        let back = reveal_message(&hidden.stego, &cover, &k1, &k2, &hidden.keyfile).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn only_plan_blocks_change() {
        let cover = covers::textured(128, 96, 2);
        let (k1, k2) = keys();
        let m = PlaintextMessage::new(*b"x").unwrap();
        let hidden = hide_message(&m, &cover, &k1, &k2, EmbedParams::default()).unwrap();
        let touched: std::collections::HashSet<(usize, usize)> = hidden
            .plan
            .sites()
            .iter()
            .map(|s| (s.block_row, s.block_col))
            .collect();
        for y in 0..cover.height() {
            for x in 0..cover.width() {
                if !touched.contains(&(y / BLOCK, x / BLOCK)) {
                    assert_eq!(cover.get(x, y), hidden.stego.get(x, y));
                }
            }
        }
    }

    #[test]
    fn black_cover_has_no_capacity() {
        let cover = GrayImage::filled(8, 8, 0).unwrap();
        let (k1, k2) = keys();
        let m = PlaintextMessage::new(*b"hi").unwrap();
        let err = hide_message(&m, &cover, &k1, &k2, EmbedParams::default()).unwrap_err();
        assert_eq!(err.stage, Stage::SelectSites);
        assert!(matches!(err.source, Error::InsufficientCapacity { .. }));
        assert_eq!(err.kind(), ErrorKind::CapacityOrFormat);
    }

    #[test]
    fn bad_params_rejected() {
        let cover = covers::textured(64, 64, 3);
        let (k1, k2) = keys();
        let m = PlaintextMessage::new(*b"hi").unwrap();
        for params in [
            EmbedParams { d: 0.0, t: 60.0 },
            EmbedParams { d: 30.0, t: 10.0 },
        ] {
            let err = hide_message(&m, &cover, &k1, &k2, params).unwrap_err();
            assert_eq!(err.kind(), ErrorKind::InvalidArgument);
        }
    }

    #[test]
    fn error_names_stage() {
        let cover = covers::textured(128, 128, 4);
        let (k1, k2) = keys();
        let m = PlaintextMessage::new(*b"stage tags").unwrap();
        let hidden = hide_message(&m, &cover, &k1, &k2, EmbedParams::default()).unwrap();

        let wrong_dims = GrayImage::filled(64, 64, 0).unwrap();
        let err = reveal_message(&wrong_dims, &cover, &k1, &k2, &hidden.keyfile).unwrap_err();
        assert!(matches!(err.source, Error::DimensionMismatch(_)));

        let err = reveal_message(
            &hidden.stego,
            &cover,
            &k1,
            &ScrambleKey::new([0xA5; 8]),
            &hidden.keyfile,
        )
        .unwrap_err();
        assert_eq!(err.stage, Stage::Unscramble);
        assert!(err.to_string().starts_with("unscramble stage failed"));
        assert_eq!(err.kind(), ErrorKind::Integrity);
    }

    #[test]
    fn deterministic() {
        let cover = covers::textured(128, 128, 5);
        let (k1, k2) = keys();
        let m = PlaintextMessage::new(*b"same in, same out").unwrap();
        let a = hide_message(&m, &cover, &k1, &k2, EmbedParams::default()).unwrap();
        let b = hide_message(&m, &cover, &k1, &k2, EmbedParams::default()).unwrap();
        assert_eq!(a.stego, b.stego);
        assert_eq!(a.keyfile.to_string(), b.keyfile.to_string());
    }
}
