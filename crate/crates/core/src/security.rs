//! Letter/digit split of the hex cipher.
//!
//! The cipher is separated into its letters (`A`-`F`) and digits (`0`-`9`). The first
//! seven letters form the [`PayloadSeptet`] hidden in the image. The letter/digit
//! layout becomes Key 3 ([`PositionKey`]) and the digits followed by the remaining
//! letters become Key 4 ([`RemainderKey`]). The digit/letter boundary inside Key 4
//! is not stored: it equals the number of zero bits in Key 3.
//!
//! Ciphers with fewer than seven letters pad the septet with `'A'` and record the
//! pad count in Key 4.

use std::fmt;
use std::str::FromStr;

use crate::crypto::HexCipher;
use crate::error::{Error, Result};

pub const SEPTET_LEN: usize = 7;
const PAD_CHAR: u8 = b'A';

fn is_letter(b: u8) -> bool {
    (b'A'..=b'F').contains(&b)
}

/// Seven characters from `A`-`F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PayloadSeptet([u8; SEPTET_LEN]);

impl PayloadSeptet {
    pub fn new(chars: [u8; SEPTET_LEN]) -> Result<Self> {
        if let Some(&c) = chars.iter().find(|&&c| !is_letter(c)) {
            return Err(Error::CharsetViolation(format!(
                "payload byte 0x{c:02X} is not in A-F"
            )));
        }
        Ok(Self(chars))
    }

    pub fn as_bytes(&self) -> &[u8; SEPTET_LEN] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("ASCII by construction")
    }
}

impl FromStr for PayloadSeptet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: [u8; SEPTET_LEN] = s.as_bytes().try_into().map_err(|_| {
            Error::LengthMismatch(format!("septet must have 7 characters, got {}", s.len()))
        })?;
        Self::new(chars)
    }
}

impl fmt::Display for PayloadSeptet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Key 3: one bit per cipher character, `true` for a letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositionKey(Vec<bool>);

impl PositionKey {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letter_count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn digit_count(&self) -> usize {
        self.len() - self.letter_count()
    }

    pub fn flip(&mut self, index: usize) {
        self.0[index] = !self.0[index];
    }

    /// `'1'`/`'0'` string, one character per cipher position.
    pub fn to_bitstring(&self) -> String {
        self.0.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl FromStr for PositionKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                other => Err(Error::CharsetViolation(format!(
                    "key3 character {other:?} is not 0 or 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for PositionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

/// Key 4: cipher digits in order, then letters 8..N in order, plus the pad count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RemainderKey {
    text: String,
    pad_count: u8,
}

impl RemainderKey {
    /// `text` must be drawn from `0`-`9`/`A`-`F` and `pad_count` at most 7. Segment
    /// consistency against Key 3 is checked by [`merge`].
    pub fn new(text: impl Into<String>, pad_count: u8) -> Result<Self> {
        let text = text.into();
        if let Some(c) = text.chars().find(|c| !matches!(c, '0'..='9' | 'A'..='F')) {
            return Err(Error::CharsetViolation(format!(
                "key4 character {c:?} is not uppercase hex"
            )));
        }
        if pad_count as usize > SEPTET_LEN {
            return Err(Error::InvalidArgument(format!(
                "pad count {pad_count} exceeds {SEPTET_LEN}"
            )));
        }
        Ok(Self { text, pad_count })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn pad_count(&self) -> u8 {
        self.pad_count
    }
}

/// Splits a cipher into the hidden septet and the two derived keys.
pub fn split(cipher: &HexCipher) -> (PayloadSeptet, PositionKey, RemainderKey) {
    split_text(cipher.as_str())
}

/// Rebuilds the cipher from the septet and Keys 3 and 4.
pub fn merge(septet: &PayloadSeptet, key3: &PositionKey, key4: &RemainderKey) -> Result<HexCipher> {
    HexCipher::new(merge_text(septet, key3, key4)?)
}

/// [`split`] over any string of `0`-`9`/`A`-`F`, without the block-length rule.
/// Characters outside that set are treated as digits.
pub fn split_text(text: &str) -> (PayloadSeptet, PositionKey, RemainderKey) {
    let bytes = text.as_bytes();
    let mask: Vec<bool> = bytes.iter().map(|&b| is_letter(b)).collect();

    let mut letters = bytes.iter().copied().filter(|&b| is_letter(b));
    let mut septet = [PAD_CHAR; SEPTET_LEN];
    let mut taken = 0;
    for slot in septet.iter_mut() {
        match letters.next() {
            Some(c) => {
                *slot = c;
                taken += 1;
            }
            None => break,
        }
    }

    let mut text: String = bytes
        .iter()
        .filter(|&&b| !is_letter(b))
        .map(|&b| b as char)
        .collect();
    text.extend(letters.map(char::from));

    (
        PayloadSeptet(septet),
        PositionKey(mask),
        RemainderKey {
            text,
            pad_count: (SEPTET_LEN - taken) as u8,
        },
    )
}

/// Inverse of [`split_text`].
pub fn merge_text(
    septet: &PayloadSeptet,
    key3: &PositionKey,
    key4: &RemainderKey,
) -> Result<String> {
    let pad = key4.pad_count as usize;
    let digit_count = key3.digit_count();
    let letter_count = key3.letter_count();

    if key4.text.len() < digit_count {
        return Err(Error::LengthMismatch(format!(
            "key3 has {digit_count} digit positions but key4 holds only {} characters",
            key4.text.len()
        )));
    }
    let (digits, tail) = key4.text.as_bytes().split_at(digit_count);

    if pad > 0 && !tail.is_empty() {
        return Err(Error::LengthMismatch(format!(
            "pad count {pad} with a non-empty letter tail of {}",
            tail.len()
        )));
    }
    let available = SEPTET_LEN - pad + tail.len();
    if available != letter_count {
        return Err(Error::LengthMismatch(format!(
            "key3 has {letter_count} letter positions but septet and key4 supply {available}"
        )));
    }
    if let Some(&c) = digits.iter().find(|c| !c.is_ascii_digit()) {
        return Err(Error::CharsetViolation(format!(
            "key4 digit segment contains {:?}",
            c as char
        )));
    }
    if let Some(&c) = tail.iter().find(|&&c| !is_letter(c)) {
        return Err(Error::CharsetViolation(format!(
            "key4 letter tail contains {:?}",
            c as char
        )));
    }
    if septet.0[SEPTET_LEN - pad..].iter().any(|&c| c != PAD_CHAR) {
        return Err(Error::CharsetViolation("septet padding is not 'A'".into()));
    }

    let mut letters = septet.0[..SEPTET_LEN - pad].iter().chain(tail);
    let mut digits = digits.iter();
    Ok(key3
        .0
        .iter()
        .map(|&is_letter| {
            let c = if is_letter {
                letters.next()
            } else {
                digits.next()
            };
            *c.expect("segment lengths checked above") as char
        })
        .collect())
}
