//! AES-128 between plaintext bytes and the uppercase hex cipher consumed by
//! [`crate::security`].
//!
//! The mode is ECB with PKCS#7 padding. There is no IV anywhere in the hide/reveal
//! flow, so identical plaintext blocks under the same key produce identical cipher
//! blocks. That leaks message structure and is acceptable only for the short
//! texts this crate is meant to carry.

mod aes;

pub use aes::{Aes128, Block, BLOCK_LEN, KEY_LEN};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// 128-bit AES key ("Key 1").
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct AesKey128([u8; KEY_LEN]);

impl AesKey128 {
    pub const fn new(bytes: [u8; KEY_LEN]) -> Self {
        Self(bytes)
    }

    pub fn as_bytes(&self) -> &[u8; KEY_LEN] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode_upper(self.0)
    }
}

impl From<[u8; KEY_LEN]> for AesKey128 {
    fn from(bytes: [u8; KEY_LEN]) -> Self {
        Self(bytes)
    }
}

/// Parses 32 hex characters, either case.
impl FromStr for AesKey128 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_hex_key::<KEY_LEN>(s, "key1").map(Self)
    }
}

impl fmt::Debug for AesKey128 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("AesKey128(..)")
    }
}

pub(crate) fn parse_hex_key<const N: usize>(s: &str, what: &str) -> Result<[u8; N]> {
    if s.len() != 2 * N {
        return Err(Error::InvalidArgument(format!(
            "{what} must be {} hex characters, got {}",
            2 * N,
            s.len()
        )));
    }
    let bytes = hex::decode(s).map_err(|e| Error::InvalidArgument(format!("{what}: {e}")))?;
    Ok(bytes.try_into().expect("length checked above"))
}

/// A non-empty plaintext.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaintextMessage(Vec<u8>);

impl PlaintextMessage {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::InvalidArgument("plaintext must not be empty".into()));
        }
        Ok(Self(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }
}

/// Uppercase hex rendering of whole AES blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HexCipher(String);

impl HexCipher {
    /// Validates an uppercase hex string whose length is a positive multiple of 32.
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if text.is_empty() || text.len() % (2 * BLOCK_LEN) != 0 {
            return Err(Error::MalformedHex(format!(
                "length {} is not a positive multiple of {}",
                text.len(),
                2 * BLOCK_LEN
            )));
        }
        if let Some((i, c)) = text
            .char_indices()
            .find(|&(_, c)| !matches!(c, '0'..='9' | 'A'..='F'))
        {
            return Err(Error::MalformedHex(format!(
                "invalid character {c:?} at {i}"
            )));
        }
        Ok(Self(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn to_bytes(&self) -> Vec<u8> {
        hex::decode(&self.0).expect("validated on construction")
    }
}

impl fmt::Display for HexCipher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// AES-128-ECB over the PKCS#7-padded plaintext, rendered as uppercase hex.
/// The output has `32 * (len / 16 + 1)` characters.
pub fn encrypt(plaintext: &PlaintextMessage, key1: &AesKey128) -> HexCipher {
    let aes = Aes128::new(key1.as_bytes());
    let data = plaintext.as_bytes();
    let pad = BLOCK_LEN - data.len() % BLOCK_LEN;
    let mut buf = Vec::with_capacity(data.len() + pad);
    buf.extend_from_slice(data);
    buf.resize(data.len() + pad, pad as u8);

    for chunk in buf.chunks_exact_mut(BLOCK_LEN) {
        let block: &mut Block = chunk.try_into().expect("exact chunk");
        aes.encrypt_block(block);
    }
    HexCipher(hex::encode_upper(buf))
}

/// Inverse of [`encrypt`]. A wrong key almost always surfaces as
/// [`Error::InvalidPadding`].
pub fn decrypt(cipher: &HexCipher, key1: &AesKey128) -> Result<PlaintextMessage> {
    let aes = Aes128::new(key1.as_bytes());
    let mut buf = cipher.to_bytes();
    for chunk in buf.chunks_exact_mut(BLOCK_LEN) {
        let block: &mut Block = chunk.try_into().expect("exact chunk");
        aes.decrypt_block(block);
    }

    let pad = *buf.last().ok_or(Error::InvalidPadding)? as usize;
    if pad == 0 || pad > BLOCK_LEN || buf[buf.len() - pad..].iter().any(|&b| b as usize != pad) {
        return Err(Error::InvalidPadding);
    }
    buf.truncate(buf.len() - pad);
    // Padding may legitimately cover a whole block, but an empty plaintext is
    // never produced by `encrypt`.
    PlaintextMessage::new(buf).map_err(|_| Error::InvalidPadding)
}

/// Convenience wrapper that validates `text` before decrypting.
pub fn decrypt_hex(text: &str, key1: &AesKey128) -> Result<PlaintextMessage> {
    decrypt(&HexCipher::new(text)?, key1)
}
