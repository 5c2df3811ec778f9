//! Front end for `duoidal-core`: the instance file format and the commands
//! of the `duoidal` binary.

pub mod commands;
pub mod instance;

pub use commands::{run, Command, Outcome, Suite, UsageError};
pub use instance::{load, Instance, InstanceFile, LoadError};

/// Environment variable overriding the probe set; same syntax as `--probes`.
pub const PROBES_ENV: &str = "DUOIDAL_PROBES";
