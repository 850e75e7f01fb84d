use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use sigjump::commands::{self, parse_braid, parse_poly, parse_turn, Output};
use sigjump::report::Format;

/// Signature jumps and Jones jump divisors of knots.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    /// Working precision in decimal digits for high-precision evaluation.
    #[arg(long, global = true, default_value_t = 30)]
    precision: u32,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format for `check` and `torus`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Symmetrized Alexander polynomial in x = t − 2 + 1/t.
    Alex { braid: String },
    /// Tristram–Levine signature at turn s (decimal or m/n).
    Sig { braid: String, s: String },
    /// Signature jumps at the Alexander roots in (0, 1/2).
    Jump { braid: String },
    /// Jones jump divisor from Δ and P.
    Jjump {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        p: String,
    },
    /// Compare j and jj over a catalog file.
    Check { catalog: PathBuf },
    /// Compare j and jj over all torus knots T(a,b) with ab ≤ max-ab.
    Torus {
        #[arg(long, default_value_t = 60)]
        max_ab: u32,
    },
    /// Good projection and skein-formula jump at one root.
    Skein {
        braid: String,
        #[arg(long, default_value_t = 0)]
        root_index: usize,
    },
    /// Signature function sampled at n midpoints of (0, 1/2).
    Samples { braid: String, n: usize },
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.cmd {
        Cmd::Alex { braid } => commands::cmd_alex(&parse_braid(braid)?),
        Cmd::Sig { braid, s } => commands::cmd_sig(&parse_braid(braid)?, parse_turn(s)?),
        Cmd::Jump { braid } => commands::cmd_jump(&parse_braid(braid)?),
        Cmd::Jjump { delta, p } => {
            commands::cmd_jjump(&parse_poly(delta, "delta")?, &parse_poly(p, "p")?, cli.precision)
        }
        Cmd::Check { catalog } => commands::cmd_check(catalog, cli.precision, cli.format),
        Cmd::Torus { max_ab } => commands::cmd_torus(*max_ab, cli.format),
        Cmd::Skein { braid, root_index } => commands::cmd_skein(&parse_braid(braid)?, *root_index),
        Cmd::Samples { braid, n } => commands::cmd_samples(&parse_braid(braid)?, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| {
        match &cli.out {
            Some(path) => std::fs::write(path, &o.text)?,
            None => print!("{}", o.text),
        }
        Ok(o.pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
