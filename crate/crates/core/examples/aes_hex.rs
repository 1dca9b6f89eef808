//! AES-128 (ECB, PKCS#7) between text and the uppercase hex cipher.
//!
//! ```bash
//! cargo run -p dct-stego --example aes_hex -- "some secret text"
//! ```

use dct_stego::crypto::Aes128;
use dct_stego::{decrypt, encrypt, AesKey128, PlaintextMessage};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // FIPS-197 appendix C.1 on the raw block primitive.
    let key: [u8; 16] = std::array::from_fn(|i| i as u8);
    let mut block: [u8; 16] = std::array::from_fn(|i| (i as u8) * 0x11);
    Aes128::new(&key).encrypt_block(&mut block);
    println!("FIPS-197 C.1 block: {}", hex::encode_upper(block));

    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "Test message".into());
    let key1: AesKey128 = "2B7E151628AED2A6ABF7158809CF4F3C".parse()?;
    let cipher = encrypt(&PlaintextMessage::new(text.as_bytes())?, &key1);
    println!("plaintext : {text:?} ({} bytes)", text.len());
    println!("cipher    : {cipher} ({} hex chars)", cipher.len());

    let back = decrypt(&cipher, &key1)?;
    println!("decrypted : {:?}", String::from_utf8_lossy(back.as_bytes()));

    let wrong = AesKey128::new([0xFF; 16]);
    match decrypt(&cipher, &wrong) {
        Ok(p) => println!(
            "wrong key : decoded to different bytes {:02X?}",
            p.as_bytes()
        ),
        Err(e) => println!("wrong key : {e}"),
    }
    Ok(())
}
