use majmeter_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// A validation identity failed; the report has already been written.
    #[error("{0} identities failed")]
    Failed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Failed(_) => 1,
            CliError::Core(e) => match e {
                Error::EmptyPartition
                | Error::InvalidRow(_)
                | Error::TooShort { .. }
                | Error::InvalidSimplexPoint(_)
                | Error::Parse(_) => 2,
                Error::CapExceeded { .. } => 3,
                Error::OddOrder(_)
                | Error::DomainError(_)
                | Error::QuadratureError(_)
                | Error::OutOfRange(_)
                | Error::DegenerateParameter(_)
                | Error::DegenerateDistribution
                | Error::ZeroAtomUnsupported => 4,
            },
        }
    }
}
