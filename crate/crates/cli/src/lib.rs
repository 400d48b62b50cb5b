//! Library side of the `quatmotion` command-line tool: JSON schemas, the
//! rate CSV reader and the subcommand bodies.

pub mod bench;
pub mod commands;
pub mod convert;
pub mod error;
pub mod json;
pub mod rates;

pub use bench::{cmd_bench, BenchConfig, RunReport};
pub use commands::{cmd_chasles, cmd_lines, cmd_propagate, tolerance_from_env, PropagateRegime, DEFAULT_TOL};
pub use convert::{cmd_convert, ReprKind};
pub use error::{CliError, CliResult};
