//! Key 2 scrambling and the +/-d coefficient rule, read back from coefficient
//! differences before and after pixel rounding.
//!
//! ```bash
//! cargo run -p dct-stego --example scramble_embed
//! ```

use dct_stego::{
    covers, embed, extract, forward_dct, inverse_dct, scramble, select_sites, unscramble,
};
use dct_stego::{PayloadSeptet, ScrambleKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let septet: PayloadSeptet = "ABCDEFA".parse()?;
    let key2: ScrambleKey = "0101010101010102".parse()?;
    let bits = scramble(&septet, &key2);
    println!("scrambled bytes {:02X?}", bits.to_bytes());
    println!("bit stream      {bits}");

    let cover = covers::noise(128, 128, 9);
    let plane = forward_dct(&cover)?;
    let plan = select_sites(&plane, 60.0, 30.0)?;
    let stego_plane = embed(&plane, &plan, &bits)?;
    let s = plan.sites()[0];
    println!(
        "site 0 value {:.2} -> {:.2} (bit {})",
        s.value,
        stego_plane.get(s.block_row, s.block_col, s.zigzag_index),
        bits.bits()[0] as u8
    );

    let exact = extract(&plane, &stego_plane, &plan)?;
    let stego = inverse_dct(&stego_plane)?;
    let rounded = extract(&plane, &forward_dct(&stego)?, &plan)?;
    println!("pre-rounding extraction exact : {}", exact.bits == bits);
    println!(
        "post-rounding extraction exact: {} ({} weak sites)",
        rounded.bits == bits,
        rounded.weak_sites.len()
    );
    println!(
        "unscrambled                   : {}",
        unscramble(&rounded.bits, &key2)?
    );

    let wrong = ScrambleKey::new([0x5A; 8]);
    println!(
        "wrong key2                    : {:?}",
        unscramble(&rounded.bits, &wrong).map(|s| s.to_string())
    );
    Ok(())
}
