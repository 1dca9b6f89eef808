//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use aes::cipher::{generic_array::GenericArray, BlockDecrypt, BlockEncrypt, KeyInit};

/// AES-128-ECB with PKCS#7 through the RustCrypto `aes` crate, as an
/// implementation-independent oracle.
pub fn oracle_encrypt_hex(plaintext: &[u8], key: &[u8; 16]) -> String {
    let cipher = aes::Aes128::new(GenericArray::from_slice(key));
    let pad = 16 - plaintext.len() % 16;
    let mut buf = plaintext.to_vec();
    buf.extend(std::iter::repeat_n(pad as u8, pad));
    for chunk in buf.chunks_exact_mut(16) {
        cipher.encrypt_block(GenericArray::from_mut_slice(chunk));
    }
    hex::encode_upper(buf)
}

pub fn oracle_block(block: &[u8; 16], key: &[u8; 16]) -> [u8; 16] {
    let cipher = aes::Aes128::new(GenericArray::from_slice(key));
    let mut b = GenericArray::clone_from_slice(block);
    cipher.encrypt_block(&mut b);
    b.into()
}

pub fn oracle_unblock(block: &[u8; 16], key: &[u8; 16]) -> [u8; 16] {
    let cipher = aes::Aes128::new(GenericArray::from_slice(key));
    let mut b = GenericArray::clone_from_slice(block);
    cipher.decrypt_block(&mut b);
    b.into()
}

/// Literal double-sum orthonormal DCT-II of one 8x8 block.
pub fn direct_dct(input: &[[f64; 8]; 8]) -> [[f64; 8]; 8] {
    use std::f64::consts::PI;
    let c = |k: usize| {
        if k == 0 {
            (1.0f64 / 8.0).sqrt()
        } else {
            (2.0f64 / 8.0).sqrt()
        }
    };
    let mut out = [[0.0; 8]; 8];
    for (u, row) in out.iter_mut().enumerate() {
        for (v, cell) in row.iter_mut().enumerate() {
            let mut s = 0.0;
            for (x, in_row) in input.iter().enumerate() {
                for (y, &p) in in_row.iter().enumerate() {
                    s += p
                        * (((2 * x + 1) * u) as f64 * PI / 16.0).cos()
                        * (((2 * y + 1) * v) as f64 * PI / 16.0).cos();
                }
            }
            *cell = c(u) * c(v) * s;
        }
    }
    out
}
