//! Process exit codes and the mapping from errors to them.

use std::fmt;
use std::process::ExitCode;

use mrpca_core::Error as CoreError;

pub const SUCCESS: u8 = 0;
/// Numerical or otherwise unclassified failure.
pub const FAILURE: u8 = 1;
pub const USAGE: u8 = 2;
pub const IO: u8 = 3;
/// The solver hit `max_iters`; outputs were still written.
pub const NOT_CONVERGED: u8 = 4;

/// Bad flags, missing parameters or an unusable config file.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

pub fn code_for(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<UsageError>() {
            return USAGE;
        }
        if let Some(e) = cause.downcast_ref::<CoreError>() {
            return match e {
                CoreError::InvalidConfig(_) | CoreError::InfeasibleScene(_) => USAGE,
                CoreError::Unreadable { .. }
                | CoreError::Unwritable { .. }
                | CoreError::Malformed { .. }
                | CoreError::UnsupportedDepth { .. } => IO,
                _ => FAILURE,
            };
        }
        if cause.is::<std::io::Error>() {
            return IO;
        }
    }
    FAILURE
}

pub fn to_exit_code(code: u8) -> ExitCode {
    ExitCode::from(code)
}
