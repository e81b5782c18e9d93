//! Error-to-exit-code mapping.
//!
//! Contract: 0 ok, 2 usage/parse, 3 enumeration cap, 4 internal
//! nonvanishing-check violation (a bug indicator), 5 io.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Lemma(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Lemma(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Cap(msg) => write!(f, "enumeration cap: {msg}"),
            CliError::Lemma(msg) => write!(f, "internal violation: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl From<qchev_core::Error> for CliError {
    fn from(e: qchev_core::Error) -> Self {
        match e {
            qchev_core::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            qchev_core::Error::LemmaViolation { .. } => CliError::Lemma(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
