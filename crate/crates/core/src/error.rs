use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),

    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),

    #[error("resource cap exceeded: {what} exceeds the cap of {cap} (override with {env_var})")]
    ResourceCap {
        what: &'static str,
        cap: usize,
        env_var: &'static str,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("integer {0} cannot be factored by trial division up to 10^6")]
    Factorization(u64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
