//! Command-line front end for `catalan-tasep`: the JSON wire format, the
//! enumerate/map/tasep/simulate commands and the verification suites.

pub mod commands;
mod error;
pub mod verify;
pub mod wire;

pub use error::CliError;
