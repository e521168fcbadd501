use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use moduli_brauer::cli::{run, CliRequest, Format, RunMode, EXIT_ERROR};

/// Brauer groups of moduli of principal bundles on a curve.
#[derive(Debug, Parser)]
#[command(version, about)]
struct Args {
    /// Preset such as `PSp(6) d=1` or raw spec `type=A3 pi1=gens:(2) delta=(0)`.
    #[arg(short = 'G', long)]
    group: Option<String>,

    #[arg(long)]
    genus: Option<u32>,

    #[arg(long, value_enum, default_value_t = RunMode::Both)]
    mode: RunMode,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[arg(long)]
    allow_low_genus: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.group.is_none() && args.mode != RunMode::Table7 {
        eprintln!("error: --group is required unless --mode table7");
        return ExitCode::from(EXIT_ERROR as u8);
    }
    let req = CliRequest {
        spec_source: args.group.unwrap_or_default(),
        genus: args.genus,
        mode: args.mode,
        format: args.format,
        allow_low_genus: args.allow_low_genus,
    };
    match run(&req) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            // a closed pipe is not an error for a report printer
            let _ = writeln!(std::io::stdout(), "{}", out.document);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
