//! The `sact` command-line tool: file formats, a named workspace of
//! monoids and acts, JSON and text reports, DOT export and the
//! `verify-paper` battery.

pub mod app;
pub mod dot;
pub mod error;
pub mod format;
pub mod verify;
pub mod workspace;

pub use app::{run, Cli, Command, Outcome};
pub use error::{CliError, Result};
pub use workspace::{Bounds, Workspace};
