use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quatmotion_cli::{
    cmd_bench, cmd_chasles, cmd_convert, cmd_lines, cmd_propagate, json, tolerance_from_env, BenchConfig, CliError,
    CliResult, PropagateRegime, ReprKind,
};

/// Quaternion representations of rotations, rigid motions and Lorentz
/// transformations.
///
/// Exit codes: 0 success, 2 schema or parse error, 3 numeric-domain error,
/// 4 I/O error. `QUATMOTION_TOL` overrides the validation tolerance
/// (default 1e-10).
#[derive(Parser)]
#[command(name = "quatmotion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between representations of the same regime.
    Convert {
        #[arg(long, value_enum)]
        from: ReprKind,
        #[arg(long, value_enum)]
        to: ReprKind,
        /// Input file, or `-` for stdin.
        #[arg(long = "in", default_value = "-")]
        input: String,
        /// Output file, or `-` for stdout.
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Screw decomposition of a rigid motion `{"a": [..], "R": [[..]]}`.
    Chasles {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Integrate a rate CSV from the identity.
    Propagate {
        #[arg(long, value_enum)]
        regime: PropagateRegime,
        /// CSV with header `t,wx,wy,wz[,vx,vy,vz]`.
        #[arg(long)]
        rates: String,
        /// RK4 step in seconds.
        #[arg(long)]
        step: f64,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Dual angle between two lines given as inline JSON or file paths.
    Lines {
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Compare quaternion, DCM and Euler-angle propagation on a seeded
    /// smooth trajectory.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long)]
        step: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Scale of the seeded angle amplitudes, in [0, 1].
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        /// Omit wall times so the report is byte-reproducible.
        #[arg(long)]
        deterministic: bool,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

fn read_input(path: &str) -> CliResult<String> {
    let io_err = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn write_output(path: &str, text: &str) -> CliResult<()> {
    let io_err = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(io_err)
    } else {
        std::fs::write(path, text).map_err(io_err)
    }
}

/// Inline JSON if it starts with `{`, otherwise a file path.
fn inline_or_file(arg: &str) -> CliResult<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        read_input(arg)
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Convert { from, to, input, out } => {
            let tol = tolerance_from_env()?;
            write_output(&out, &cmd_convert(from, to, &read_input(&input)?, tol)?)
        }
        Command::Chasles { input, out } => {
            let tol = tolerance_from_env()?;
            write_output(&out, &cmd_chasles(&read_input(&input)?, tol)?)
        }
        Command::Propagate { regime, rates, step, out } => {
            write_output(&out, &cmd_propagate(&read_input(&rates)?, regime, step)?)
        }
        Command::Lines { l1, l2, out } => write_output(&out, &cmd_lines(&inline_or_file(&l1)?, &inline_or_file(&l2)?)?),
        Command::Bench { steps, step, seed, amplitude, deterministic, out } => {
            let report = cmd_bench(BenchConfig { steps, h: step, seed, amplitude, deterministic })?;
            write_output(&out, &json::to_string(&report)?)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("quatmotion: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
