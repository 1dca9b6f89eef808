//! Corrupts each of the four keys in turn and shows how reveal fails.
//!
//! ```bash
//! cargo run -p dct-stego --example four_keys
//! ```

use dct_stego::{
    covers, hide_message, reveal_message, AesKey128, EmbedParams, KeyFile, PlaintextMessage,
    RemainderKey, ScrambleKey,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cover = covers::textured(256, 256, 5);
    let key1 = AesKey128::new(*b"four keys needed");
    let key2 = ScrambleKey::new(*b"scramble");
    let msg = PlaintextMessage::new(*b"all four or nothing")?;
    let hidden = hide_message(&msg, &cover, &key1, &key2, EmbedParams::default())?;
    let kf = &hidden.keyfile;

    let report = |label: &str, r: Result<PlaintextMessage, dct_stego::PipelineError>| match r {
        Ok(p) if p == msg => println!("{label:<14} recovered the message"),
        Ok(p) => println!(
            "{label:<14} wrong bytes {:02X?}",
            &p.as_bytes()[..p.as_bytes().len().min(8)]
        ),
        Err(e) => println!("{label:<14} {e}"),
    };

    report(
        "all keys",
        reveal_message(&hidden.stego, &cover, &key1, &key2, kf),
    );

    let mut k1 = *key1.as_bytes();
    k1[0] ^= 1;
    report(
        "key1 bit 0",
        reveal_message(&hidden.stego, &cover, &AesKey128::new(k1), &key2, kf),
    );

    let mut k2 = *key2.as_bytes();
    k2[7] ^= 1;
    report(
        "key2 bit 56",
        reveal_message(&hidden.stego, &cover, &key1, &ScrambleKey::new(k2), kf),
    );

    let mut bad3 = kf.clone();
    bad3.key3.flip(3);
    report(
        "key3 bit 3",
        reveal_message(&hidden.stego, &cover, &key1, &key2, &bad3),
    );

    let mut text = kf.key4.text().to_string().into_bytes();
    let i = text.iter().position(u8::is_ascii_digit).unwrap();
    text[i] = if text[i] == b'0' { b'1' } else { b'0' };
    let bad4 = KeyFile {
        key4: RemainderKey::new(String::from_utf8(text)?, kf.key4.pad_count())?,
        ..kf.clone()
    };
    report(
        "key4 digit",
        reveal_message(&hidden.stego, &cover, &key1, &key2, &bad4),
    );
    Ok(())
}
