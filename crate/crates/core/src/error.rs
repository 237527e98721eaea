use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown ids, broken invariants).
    #[error("input error: {0}")]
    Input(String),
    /// An explicit budget or cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// The request is outside the sizes an exhaustive routine supports.
    #[error("capability limit: {0}")]
    Capability(String),
    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),
    /// A catalog fixture failed its self-check.
    #[error("fixture {name} failed self-check: {detail}")]
    Fixture { name: String, detail: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
