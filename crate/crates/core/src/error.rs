use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe has no elements")]
    EmptyUniverse,
    #[error("element label is empty")]
    EmptyLabel,
    #[error("element label `{0}` is declared more than once")]
    DuplicateLabel(String),
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("block references unknown element `{0}`")]
    UnknownLabel(String),
    #[error("blocks do not cover the universe; uncovered: {}", .uncovered.join(" "))]
    NotACovering { uncovered: Vec<String> },
    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("universe size {n} exceeds the exhaustive limit of {cap}")]
    UniverseTooLarge { n: usize, cap: usize },
    #[error("set is defined over a universe of size {got}, expected {expected}")]
    UniverseMismatch { expected: usize, got: usize },
    #[error("internal disagreement: {0}")]
    InternalDisagreement(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, len: usize) -> Result<()> {
    if index < len {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, len })
    }
}
