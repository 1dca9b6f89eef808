//! PSNR of a stego image against its cover and BER of a damaged payload.
//!
//! ```bash
//! cargo run -p dct-stego --example quality
//! ```

use dct_stego::{
    ber, covers, hide_message, psnr, AesKey128, EmbedParams, PayloadBits, PlaintextMessage,
    ScrambleKey,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cover = covers::textured(512, 512, 77);
    let (key1, key2) = (AesKey128::new([1; 16]), ScrambleKey::new([2; 8]));
    let msg = PlaintextMessage::new(*b"quality check")?;

    for d in [10.0, 30.0, 50.0] {
        let hidden = hide_message(&msg, &cover, &key1, &key2, EmbedParams::with_persistence(d))?;
        println!("d = {d:>4}: {}", psnr(&cover, &hidden.stego)?);
    }
    println!("identical : {}", psnr(&cover, &cover)?);

    let sent = PayloadBits::from_bytes(b"ABCDEFA");
    let mut damaged = *sent.bits();
    for b in damaged.iter_mut().step_by(8) {
        *b = !*b;
    }
    println!(
        "BER, 7 of 56 flipped: {}",
        ber(&sent, &PayloadBits::new(damaged))
    );
    println!("BER, complemented   : {}", ber(&sent, &sent.complement()));
    Ok(())
}
