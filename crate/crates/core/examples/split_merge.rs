//! Letter/digit split of a hex cipher into the hidden septet, Key 3 and Key 4.
//!
//! ```bash
//! cargo run -p dct-stego --example split_merge
//! ```

use dct_stego::security::{merge_text, split_text};
use dct_stego::{encrypt, merge, split, AesKey128, PlaintextMessage};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (septet, key3, key4) = split_text("AB12CD34EF56AB78");
    println!(
        "AB12CD34EF56AB78 -> septet {septet}, key3 {key3}, key4 {} (pad {})",
        key4.text(),
        key4.pad_count()
    );
    println!("merged back      -> {}", merge_text(&septet, &key3, &key4)?);

    let cipher = encrypt(
        &PlaintextMessage::new(*b"split me")?,
        &AesKey128::new([3; 16]),
    );
    let (septet, key3, key4) = split(&cipher);
    println!();
    println!("cipher : {cipher}");
    println!("septet : {septet}   (hidden in the image)");
    println!("key3   : {key3}");
    println!("key4   : {}   pad {}", key4.text(), key4.pad_count());
    assert_eq!(merge(&septet, &key3, &key4)?, cipher);

    let mut bad = key3.clone();
    bad.flip(0);
    println!(
        "flipped key3 bit 0 -> {:?}",
        merge(&septet, &bad, &key4).map(|c| c.to_string())
    );
    Ok(())
}
