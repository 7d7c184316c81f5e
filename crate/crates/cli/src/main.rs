mod commands;
mod output;
mod parse;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use slopewalk::asymptotics::Precision;

use commands::{asymptotics, count, series, verify};

/// Exact counts, series, identity checks and asymptotic constants for lattice
/// paths below a line of rational slope.
#[derive(Parser)]
#[command(name = "slopewalk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count walks or North/East paths exactly.
    Count(count::Args),
    /// Dump coefficients of a generating function.
    Series(series::Args),
    /// Run an identity verification suite.
    Verify(verify::Args),
    /// Structural and asymptotic constants.
    Asymptotics(asymptotics::Args),
}

/// Working precision: `--digits`, then `SLOPEWALK_PRECISION`, then 50.
pub fn precision(digits: Option<u32>) -> slopewalk::Result<Precision> {
    let digits = match digits {
        Some(d) => d,
        None => match std::env::var("SLOPEWALK_PRECISION") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| output::usage(format!("SLOPEWALK_PRECISION={v:?} is not a digit count")))?,
            Err(_) => return Ok(Precision::default()),
        },
    };
    Precision::new(digits)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(a) => count::run(a),
        Command::Series(a) => series::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Asymptotics(a) => asymptotics::run(a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("slopewalk: {e}");
            ExitCode::from(output::exit_code(&e))
        }
    }
}
