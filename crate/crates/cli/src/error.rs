use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const RANK: i32 = 4;
    pub const CONDITION: i32 = 5;
    pub const BUDGET: i32 = 6;
    pub const VERIFICATION: i32 = 7;
    pub const IO: i32 = 8;
    pub const INTERNAL: i32 = 9;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] subrank::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Setup(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use subrank::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::Format { .. } => exit::PARSE,
                E::Rank { .. } => exit::RANK,
                E::Condition(_) => exit::CONDITION,
                E::Budget { .. } => exit::BUDGET,
                E::Argument(_) | E::Dimension(_) | E::Index(_) => exit::USAGE,
                E::Invariant(_) | E::Consistency(_) | E::UndefinedDistance => exit::INTERNAL,
            },
            CliError::Io { .. } => exit::IO,
            CliError::Setup(_) => exit::INTERNAL,
        }
    }
}
