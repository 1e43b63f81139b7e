use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use hasse_l2::verifier::{emit_report, run_verification, Format, Routes, RunConfig};

/// Verify the supersingular order of L_2(Delta^t), t = i(p^2 - 1)/12, on a grid of (p, i).
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Cli {
    /// Primes p >= 5, comma separated.
    #[arg(long = "p", value_delimiter = ',', required = true)]
    primes: Vec<u32>,
    /// Indices i >= 1, comma separated.
    #[arg(long = "i", value_delimiter = ',', required = true)]
    indices: Vec<u64>,
    #[arg(long, value_enum, default_value = "both")]
    routes: Routes,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// lambda-route precision is p^nu + margin.
    #[arg(long, default_value_t = 2)]
    precision_margin: usize,
    /// Fixed lambda-route precision, overriding the margin.
    #[arg(long)]
    lambda_precision: Option<usize>,
    /// Fixed q-route precision instead of 3t + 2.
    #[arg(long)]
    q_precision: Option<usize>,
    /// Largest q-route precision accepted.
    #[arg(long, default_value_t = 2000)]
    q_ceiling: usize,
    /// Seed for the sampled Lucas checks.
    #[arg(long, default_value_t = 0x4c32)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = RunConfig::new(cli.primes, cli.indices, cli.routes);
    cfg.precision_margin = cli.precision_margin;
    cfg.lambda_precision = cli.lambda_precision;
    cfg.q_precision = cli.q_precision;
    cfg.q_ceiling = cli.q_ceiling;
    cfg.seed = cli.seed;

    let report = match run_verification(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let doc = match emit_report(&report, cli.format) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, doc) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{doc}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
