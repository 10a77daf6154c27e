//! Command-line front end: polynomial parsing, batch classification and
//! text or JSON rendering.

pub mod output;
pub mod parse;
pub mod run;

pub use parse::{parse_poly, ParseError};
pub use run::{batch_lines, run, CliConfig, ConfigError, ExitClass, InputMode, OutputMode, RunOutput};
