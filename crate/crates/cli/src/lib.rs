//! Command-line front end and file formats for `hawaii-core`.

pub mod cli;
pub mod commands;
pub mod error;
pub mod fuzz;
pub mod generate;
pub mod parse;
pub mod report;

pub use cli::run;
pub use error::{CliError, CliResult};
pub use generate::{generate_instance, InstanceSpec};
pub use parse::parse_polynomial;
