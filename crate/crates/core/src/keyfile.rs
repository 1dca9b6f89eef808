//! Line-oriented key file carrying Key 3, Key 4 and the embedding parameters.
//!
//! ```text
//! KEY3=<bitstring>
//! KEY4=<uppercase hex-charset text>
//! PAD=<0..7>
//! D=<decimal>
//! T=<decimal>
//! ```
//!
//! Each line ends with a single `\n`, in exactly this order. Decimals are written in
//! Rust's shortest round-trip form (`30`, `2.5`), which makes canonical files
//! re-serialize byte-for-byte.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::security::{PositionKey, RemainderKey};

#[derive(Debug, Clone, PartialEq)]
pub struct KeyFile {
    pub key3: PositionKey,
    pub key4: RemainderKey,
    pub d: f64,
    pub t: f64,
}

impl KeyFile {
    pub fn new(key3: PositionKey, key4: RemainderKey, d: f64, t: f64) -> Result<Self> {
        validate_params(d, t)?;
        Ok(Self { key3, key4, d, t })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => Error::NotFound(path.to_path_buf()),
            std::io::ErrorKind::InvalidData => Error::KeyFile("not valid UTF-8".into()),
            _ => Error::Io(e),
        })?;
        text.parse()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_string())?;
        Ok(())
    }
}

pub(crate) fn validate_params(d: f64, t: f64) -> Result<()> {
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "persistence factor must be positive, got {d}"
        )));
    }
    if !(t.is_finite() && t >= d) {
        return Err(Error::InvalidArgument(format!(
            "threshold must be at least d = {d}, got {t}"
        )));
    }
    Ok(())
}

impl fmt::Display for KeyFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "KEY3={}", self.key3)?;
        writeln!(f, "KEY4={}", self.key4.text())?;
        writeln!(f, "PAD={}", self.key4.pad_count())?;
        writeln!(f, "D={}", self.d)?;
        writeln!(f, "T={}", self.t)
    }
}

impl FromStr for KeyFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_suffix('\n')
            .ok_or_else(|| Error::KeyFile("missing trailing newline".into()))?;
        let lines: Vec<&str> = body.split('\n').collect();
        const FIELDS: [&str; 5] = ["KEY3", "KEY4", "PAD", "D", "T"];
        if lines.len() != FIELDS.len() {
            return Err(Error::KeyFile(format!(
                "expected {} lines, found {}",
                FIELDS.len(),
                lines.len()
            )));
        }
        let mut values = [""; 5];
        for (i, (line, name)) in lines.iter().zip(FIELDS).enumerate() {
            values[i] = line
                .strip_prefix(name)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or_else(|| Error::KeyFile(format!("line {} must start with {name}=", i + 1)))?;
        }

        let key3: PositionKey = values[0].parse()?;
        let pad: u8 = values[2]
            .parse()
            .map_err(|_| Error::KeyFile(format!("invalid PAD value {:?}", values[2])))?;
        let key4 = RemainderKey::new(values[1], pad)?;
        let decimal = |name: &str, v: &str| -> Result<f64> {
            // Reject forms like "inf" or "1e3" that f64::from_str would take.
            if v.is_empty()
                || !v
                    .bytes()
                    .all(|b| b.is_ascii_digit() || b == b'.' || b == b'-')
            {
                return Err(Error::KeyFile(format!("invalid {name} value {v:?}")));
            }
            v.parse()
                .map_err(|_| Error::KeyFile(format!("invalid {name} value {v:?}")))
        };
        let d = decimal("D", values[3])?;
        let t = decimal("T", values[4])?;
        validate_params(d, t).map_err(|e| Error::KeyFile(e.to_string()))?;
        Ok(Self { key3, key4, d, t })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "KEY3=1100110011001100\nKEY4=12345678B\nPAD=0\nD=30\nT=60\n";

    #[test]
    fn canonical_round_trip() {
        let kf: KeyFile = SAMPLE.parse().unwrap();
        assert_eq!(kf.key3.to_bitstring(), "1100110011001100");
        assert_eq!(kf.key4.text(), "12345678B");
        assert_eq!((kf.d, kf.t), (30.0, 60.0));
        assert_eq!(kf.to_string(), SAMPLE);
    }

    #[test]
    fn fractional_params() {
        let text = "KEY3=0\nKEY4=\nPAD=7\nD=2.5\nT=5.25\n";
        let kf: KeyFile = text.parse().unwrap();
        assert_eq!(kf.to_string(), text);
    }

    #[test]
    fn rejects_malformed() {
        let bad = [
            "KEY3=1100\nKEY4=12\nPAD=0\nD=30\nT=60",
            "KEY4=12\nKEY3=1100\nPAD=0\nD=30\nT=60\n",
            "KEY3=1100\nKEY4=12\nPAD=0\nD=30\nT=60\n\n",
            "KEY3=11x0\nKEY4=12\nPAD=0\nD=30\nT=60\n",
            "KEY3=1100\nKEY4=1g\nPAD=0\nD=30\nT=60\n",
            "KEY3=1100\nKEY4=12\nPAD=9\nD=30\nT=60\n",
            "KEY3=1100\nKEY4=12\nPAD=0\nD=0\nT=60\n",
            "KEY3=1100\nKEY4=12\nPAD=0\nD=30\nT=20\n",
            "KEY3=1100\nKEY4=12\nPAD=0\nD=inf\nT=60\n",
            "KEY3=1100\r\nKEY4=12\nPAD=0\nD=30\nT=60\n",
        ];
        for text in bad {
            assert!(text.parse::<KeyFile>().is_err(), "{text:?}");
        }
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("keys.txt");
        let kf: KeyFile = SAMPLE.parse().unwrap();
        kf.save(&path).unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), SAMPLE);
        assert_eq!(KeyFile::load(&path).unwrap(), kf);
    }
}
