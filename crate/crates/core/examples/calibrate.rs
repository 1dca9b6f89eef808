//! Sweeps the persistence factor over the synthetic corpus and reports the
//! post-rounding bit error rate, capacity and PSNR for each `d` (with `t = 2d`).
//!
//! ```bash
//! cargo run --release -p dct-stego --example calibrate
//! ```

use dct_stego::pipeline::EmbedParams;
use dct_stego::{
    ber, covers, extract, forward_dct, hide_message, AesKey128, PlaintextMessage, ScrambleKey,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = covers::corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0xCA11);
    let mut chosen = None;

    println!(
        "{:>4} {:>5} {:>10} {:>12} {:>10}",
        "d", "t", "worst BER", "min PSNR dB", "min cap"
    );
    for d in (5..=50).step_by(5).map(f64::from) {
        let params = EmbedParams::with_persistence(d);
        let (mut worst_ber, mut min_psnr, mut min_cap) = (0.0f64, f64::INFINITY, usize::MAX);
        for (_, cover) in &corpus {
            let plane = forward_dct(cover)?;
            let eligible = plane_capacity(&plane, params.t);
            min_cap = min_cap.min(eligible);

            let key1 = AesKey128::new(rng.gen());
            let key2 = ScrambleKey::new(rng.gen());
            let len = rng.gen_range(1..=64);
            let msg = PlaintextMessage::new((0..len).map(|_| rng.gen()).collect::<Vec<u8>>())?;
            let hidden = hide_message(&msg, cover, &key1, &key2, params)?;
            let received = forward_dct(&hidden.stego)?;
            let bits = extract(&plane, &received, &hidden.plan)?.bits;
            worst_ber = worst_ber.max(ber(&hidden.payload, &bits));
            if let dct_stego::Psnr::Finite(db) = hidden.quality.psnr_db {
                min_psnr = min_psnr.min(db);
            }
        }
        println!(
            "{d:>4} {:>5} {worst_ber:>10.4} {min_psnr:>12.2} {min_cap:>10}",
            params.t
        );
        if worst_ber == 0.0 && chosen.is_none() {
            chosen = Some(d);
        }
    }
    match chosen {
        Some(d) => println!("smallest d with zero BER: {d}"),
        None => println!("no d in 5..=50 reached zero BER"),
    }
    Ok(())
}

fn plane_capacity(plane: &dct_stego::DctPlane, t: f64) -> usize {
    let mut n = 0;
    for br in 0..plane.block_rows() {
        for bc in 0..plane.block_cols() {
            n += dct_stego::dct::BAND
                .filter(|&zz| plane.get(br, bc, zz) > t)
                .count();
        }
    }
    n
}
