use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: unknown ids, bad indices, unparsable text.
    #[error("input error: {0}")]
    Input(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// `t_p X != s_p Y`; both boundaries rendered as sorted label lists.
    #[error("composition error along {p}: target {left_target} differs from source {right_source}")]
    Compose { p: usize, left_target: String, right_source: String },
    #[error("inadmissible complex: {0}")]
    Inadmissible(String),
    #[error("resource cap exceeded: {what} (cap {cap})")]
    Resource { what: String, cap: usize },
    /// A postcondition that must hold by construction failed.
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn resource(what: impl Into<String>, cap: usize) -> Self {
        Error::Resource { what: what.into(), cap }
    }
}
