use thiserror::Error;

/// Errors raised by the library. Each variant names the stage that refused
/// the input so the CLI can map it onto an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system: {0}")]
    UnsupportedRootSystem(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid Weyl group element: {0}")]
    InvalidWeylElement(String),
    #[error("not a root of the datum: {0}")]
    NotARoot(String),
    #[error("group enumeration exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("assumption {assumption} failed: {detail}")]
    AssumptionFailed { assumption: &'static str, detail: String },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
