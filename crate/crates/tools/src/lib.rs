//! Command-line tool and std-only helpers for `impartial-core`: graph files,
//! JSON and CSV reports, environment-driven size guards, and parallel
//! drivers for searches, sampling and verification suites.

pub mod error;
pub mod format;
pub mod parallel;
pub mod settings;
pub mod verify;

pub use error::{exit, Result, ToolError};
