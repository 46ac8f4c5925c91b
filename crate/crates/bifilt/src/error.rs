use std::path::PathBuf;

use crate::format::ParseError;

/// Process exit codes.
pub mod exit {
    pub const MISMATCH: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const INVARIANT: i32 = 3;
    pub const CELL_CAP: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {err}", path.display())]
    Parse { path: PathBuf, err: ParseError },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] bifilt_core::Error),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use bifilt_core::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => exit::INPUT,
            CliError::Mismatch(_) => exit::MISMATCH,
            CliError::Core(e) => match e {
                E::CellCapExceeded { .. } => exit::CELL_CAP,
                E::Invariant(_) | E::LinearProgram(_) => exit::INVARIANT,
                _ => exit::INPUT,
            },
        }
    }
}
