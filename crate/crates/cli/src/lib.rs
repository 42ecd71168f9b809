//! Library side of the `starmarkov` tool: the verification batteries and the subcommand bodies.

pub mod checks;
pub mod commands;

pub use checks::Suite;
pub use commands::{CliError, PresentFormat, TreeFormat, TreeKind};
