//! The `l1disc` command line: `card`, `metric`, `verify` and `render`.
//!
//! Exit codes: 0 success, 1 usage, 2 malformed input, 3 verification
//! disagreement, 4 I/O failure, 5 invalid scene contents.

mod commands;
pub mod render;
pub mod report;
pub mod scene;

pub use commands::{run, Cli, Command, Format};
pub use render::{Canvas, Cell, Mode};
pub use scene::{load_scene, parse_scene, Scene, SceneError, Window};

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const DISAGREEMENT: i32 = 3;
    pub const IO: i32 = 4;
    pub const INVALID: i32 = 5;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("I/O: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Parse(_) => exit::PARSE,
            CliError::Invalid(_) => exit::INVALID,
            CliError::Io(_) => exit::IO,
        }
    }
}
