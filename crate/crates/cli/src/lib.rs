//! Library side of the `perron` binary: wire format, job execution and the
//! terminal adversary.

pub mod commands;
pub mod json;
pub mod prompt;

pub use commands::{execute, exit, Command, Failure, Options, Outcome, DEFAULT_STEP_LIMIT};
