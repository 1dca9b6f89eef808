use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dct_stego::pipeline::{self, EmbedParams, DEFAULT_PERSISTENCE};
use dct_stego::{pgm, AesKey128, ErrorKind, GrayImage, KeyFile, PlaintextMessage, ScrambleKey};

#[derive(Parser)]
#[command(
    name = "dct-stego",
    version,
    about = "Hide AES-encrypted text in the DCT domain of a PGM image"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a message into a cover image and write the stego image and key file.
    Hide(HideArgs),
    /// Recover a message from a stego image, its original cover and the keys.
    Reveal(RevealArgs),
    /// Compare two images.
    Psnr { a: PathBuf, b: PathBuf },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("message").required(true).args(["msg", "msg_file"])))]
struct HideArgs {
    #[arg(long)]
    cover: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    msg: Option<String>,
    #[arg(long)]
    msg_file: Option<PathBuf>,
    /// AES-128 key, 32 hex characters.
    #[arg(long)]
    key1: String,
    /// Scramble key, 16 hex characters.
    #[arg(long)]
    key2: String,
    #[arg(long)]
    keys_out: PathBuf,
    /// Persistence factor.
    #[arg(long)]
    d: Option<f64>,
    /// Coefficient threshold, defaults to 2d.
    #[arg(long)]
    t: Option<f64>,
    /// Crop the cover to a multiple of 8 instead of rejecting it.
    #[arg(long)]
    crop: bool,
}

#[derive(Args)]
struct RevealArgs {
    #[arg(long)]
    cover: PathBuf,
    #[arg(long)]
    stego: PathBuf,
    #[arg(long)]
    key1: String,
    #[arg(long)]
    key2: String,
    #[arg(long)]
    keys: PathBuf,
    /// Crop the cover the same way `hide --crop` did.
    #[arg(long)]
    crop: bool,
}

/// Message plus exit code.
struct Failure(String, u8);

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::InvalidArgument => 2,
        ErrorKind::CapacityOrFormat => 3,
        ErrorKind::Integrity => 4,
    }
}

impl From<dct_stego::Error> for Failure {
    fn from(e: dct_stego::Error) -> Self {
        let code = exit_code(e.kind());
        Failure(e.to_string(), code)
    }
}

impl From<dct_stego::PipelineError> for Failure {
    fn from(e: dct_stego::PipelineError) -> Self {
        let code = exit_code(e.kind());
        Failure(e.to_string(), code)
    }
}

fn invalid(e: dct_stego::Error) -> Failure {
    Failure(e.to_string(), 2)
}

fn load_cover(path: &PathBuf, crop: bool) -> Result<GrayImage, Failure> {
    let img = pgm::load(path)?;
    Ok(if crop { pgm::crop_to_block(&img)? } else { img })
}

fn hide(args: HideArgs) -> Result<(), Failure> {
    let key1: AesKey128 = args.key1.parse().map_err(invalid)?;
    let key2: ScrambleKey = args.key2.parse().map_err(invalid)?;
    let text = match (&args.msg, &args.msg_file) {
        (Some(m), _) => m.clone().into_bytes(),
        (None, Some(path)) => {
            std::fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display()), 2))?
        }
        (None, None) => unreachable!("clap enforces the message group"),
    };
    let msg = PlaintextMessage::new(text).map_err(invalid)?;
    let d = args.d.unwrap_or(DEFAULT_PERSISTENCE);
    let params = EmbedParams {
        d,
        t: args.t.unwrap_or(2.0 * d),
    };

    let cover = load_cover(&args.cover, args.crop)?;
    let hidden = pipeline::hide_message(&msg, &cover, &key1, &key2, params)?;
    pgm::save(&hidden.stego, &args.out)?;
    hidden.keyfile.save(&args.keys_out)?;
    println!("{}", hidden.quality);
    Ok(())
}

fn reveal(args: RevealArgs) -> Result<(), Failure> {
    let key1: AesKey128 = args.key1.parse().map_err(invalid)?;
    let key2: ScrambleKey = args.key2.parse().map_err(invalid)?;
    let keyfile = KeyFile::load(&args.keys)?;
    let cover = load_cover(&args.cover, args.crop)?;
    let stego = pgm::load(&args.stego)?;

    let revealed = pipeline::reveal_message_detailed(&stego, &cover, &key1, &key2, &keyfile)?;
    for site in &revealed.weak_sites {
        eprintln!("warning: weak coefficient difference at embedding site {site}");
    }
    let mut out = std::io::stdout().lock();
    out.write_all(revealed.plaintext.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure(e.to_string(), 3))
}

fn compare(a: PathBuf, b: PathBuf) -> Result<(), Failure> {
    let report = dct_stego::psnr(&pgm::load(a)?, &pgm::load(b)?)?;
    println!("{report}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Hide(args) => hide(args),
        Command::Reveal(args) => reveal(args),
        Command::Psnr { a, b } => compare(a, b),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
