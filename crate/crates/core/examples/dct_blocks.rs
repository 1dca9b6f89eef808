//! Blockwise DCT, the zigzag band, and selection of the 56 embedding sites.
//!
//! ```bash
//! cargo run -p dct-stego --example dct_blocks
//! ```

use dct_stego::dct::{inverse_dct_raw, BAND, ZIGZAG};
use dct_stego::{covers, forward_dct, inverse_dct, select_sites, GrayImage};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let flat = forward_dct(&GrayImage::filled(8, 8, 128)?)?;
    println!(
        "constant-128 block: DC = {:.3}, max |AC| = {:.1e}",
        flat.get(0, 0, 0),
        (1..64u8)
            .map(|zz| flat.get(0, 0, zz).abs())
            .fold(0.0, f64::max)
    );

    println!(
        "band zigzag {}..={} covers natural indices {:?}",
        BAND.start(),
        BAND.end(),
        &ZIGZAG[*BAND.start() as usize..=*BAND.end() as usize]
    );

    let cover = covers::textured(256, 256, 42);
    let plane = forward_dct(&cover)?;
    let raw = inverse_dct_raw(&plane)?;
    let err = raw
        .iter()
        .zip(cover.pixels())
        .map(|(r, &p)| (r - p as f64).abs())
        .fold(0.0, f64::max);
    println!(
        "256x256 cover: max round-trip error {err:.1e}, exact after rounding: {}",
        inverse_dct(&plane)? == cover
    );

    let plan = select_sites(&plane, 60.0, 30.0)?;
    println!("top sites (block row, block col, zigzag, value):");
    for s in plan.sites().iter().take(8) {
        println!(
            "  ({:>2}, {:>2}, {:>2})  {:8.2}",
            s.block_row, s.block_col, s.zigzag_index, s.value
        );
    }
    println!(
        "  ... {} sites, smallest {:.2}",
        plan.sites().len(),
        plan.sites().last().unwrap().value
    );

    match select_sites(&forward_dct(&GrayImage::filled(8, 8, 0)?)?, 60.0, 30.0) {
        Err(e) => println!("all-black 8x8: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
