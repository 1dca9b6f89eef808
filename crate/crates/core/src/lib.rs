//! # dct-stego
//!
//! Hides a short AES-128 encrypted message in the DCT domain of a grayscale image
//! and recovers it given the original cover and four keys:
//!
//! * **Key 1**: 128-bit AES key ([`AesKey128`]).
//! * **Key 2**: 64-bit scramble key for the hidden bits ([`ScrambleKey`]).
//! * **Key 3**: letter/digit position mask of the hex cipher ([`PositionKey`]).
//! * **Key 4**: the cipher digits plus the letters beyond the seventh ([`RemainderKey`]).
//!
//! Only the first seven letters of the cipher (56 bits) travel inside the image;
//! Keys 3 and 4 are produced by [`hide_message`] and saved as a [`KeyFile`].
//!
//! ```
//! use dct_stego::{covers, hide_message, reveal_message, AesKey128, EmbedParams,
//!                 PlaintextMessage, ScrambleKey};
//!
//! let cover = covers::textured(128, 128, 7);
//! let key1 = AesKey128::new(*b"an example key!!");
//! let key2 = ScrambleKey::new(*b"scramble");
//! let msg = PlaintextMessage::new(*b"attack at dawn").unwrap();
//!
//! let hidden = hide_message(&msg, &cover, &key1, &key2, EmbedParams::default()).unwrap();
//! let back = reveal_message(&hidden.stego, &cover, &key1, &key2, &hidden.keyfile).unwrap();
//! assert_eq!(back, msg);
//! ```
//!
//! ## Examples
//!
//! | example | shows |
//! |---|---|
//! | `aes_hex` | AES-128 block primitive, text to hex cipher and back |
//! | `split_merge` | cipher split into septet, Key 3 and Key 4 |
//! | `dct_blocks` | blockwise DCT, zigzag band, site selection |
//! | `scramble_embed` | Key 2 scrambling, embedding and difference extraction |
//! | `hide_reveal` | full pipeline through PGM and key files on disk |
//! | `four_keys` | what happens when each key is corrupted |
//! | `quality` | PSNR and BER |
//! | `calibrate` | sweep of `d` over the synthetic corpus |
//!
//! Run one with `cargo run -p dct-stego --example <name>`.

pub mod codec;
pub mod covers;
pub mod crypto;
pub mod dct;
pub mod error;
pub mod image;
pub mod keyfile;
pub mod metrics;
pub mod pgm;
pub mod pipeline;
pub mod security;

pub use codec::{embed, extract, scramble, unscramble, Extraction, PayloadBits, ScrambleKey};
pub use crypto::{decrypt, encrypt, AesKey128, HexCipher, PlaintextMessage};
pub use dct::{forward_dct, inverse_dct, select_sites, CoefficientSite, DctPlane, EmbedPlan};
pub use error::{Error, ErrorKind, PipelineError, Stage};
pub use image::GrayImage;
pub use keyfile::KeyFile;
pub use metrics::{ber, psnr, Psnr, QualityReport};
pub use pipeline::{hide_message, reveal_message, EmbedParams, HideResult};
pub use security::{merge, split, PayloadSeptet, PositionKey, RemainderKey};
