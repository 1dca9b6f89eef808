//! Full pipeline through files: write a cover PGM, hide a message, save the stego
//! image and key file, then reveal from what was written to disk.
//!
//! ```bash
//! cargo run -p dct-stego --example hide_reveal -- "rendezvous at the old mill"
//! ```

use dct_stego::pipeline::reveal_message_detailed;
use dct_stego::{
    covers, hide_message, pgm, AesKey128, EmbedParams, KeyFile, PlaintextMessage, ScrambleKey,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "rendezvous at the old mill".into());
    let dir = std::env::temp_dir().join(format!("dct-stego-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let (cover_path, stego_path, keys_path) = (
        dir.join("cover.pgm"),
        dir.join("stego.pgm"),
        dir.join("keys.txt"),
    );

    pgm::save(&covers::textured(512, 512, 2024), &cover_path)?;
    let key1: AesKey128 = "000102030405060708090A0B0C0D0E0F".parse()?;
    let key2: ScrambleKey = "0123456789ABCDEF".parse()?;

    let cover = pgm::load(&cover_path)?;
    let hidden = hide_message(
        &PlaintextMessage::new(text.as_bytes())?,
        &cover,
        &key1,
        &key2,
        EmbedParams::default(),
    )?;
    pgm::save(&hidden.stego, &stego_path)?;
    hidden.keyfile.save(&keys_path)?;
    println!("hid {} bytes; {}", text.len(), hidden.quality);
    println!("key file:\n{}", std::fs::read_to_string(&keys_path)?);

    let revealed = reveal_message_detailed(
        &pgm::load(&stego_path)?,
        &pgm::load(&cover_path)?,
        &key1,
        &key2,
        &KeyFile::load(&keys_path)?,
    )?;
    println!(
        "revealed: {:?}",
        String::from_utf8_lossy(revealed.plaintext.as_bytes())
    );
    println!("weak sites: {:?}", revealed.weak_sites);

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
