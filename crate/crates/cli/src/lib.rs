//! Library side of the `albanese` command-line tool.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod envelope;
pub mod error;
pub mod suites;

pub use cli::{Cli, Format};
pub use commands::run;
pub use envelope::Envelope;
pub use error::{CliError, Status};
