//! File formats and the `flagcd` command-line front end.

mod commands;
pub mod formats;

pub use commands::{run, Outcome};
