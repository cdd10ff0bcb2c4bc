use thiserror::Error;

/// Errors raised by group construction, enumeration and the derived
/// tensor-square computations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group order {order} exceeds the configured limit {limit}")]
    OrderLimit { order: usize, limit: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("invalid amalgam: {0}")]
    InvalidAmalgam(String),
    #[error("coset enumeration exceeded {max_cosets} cosets")]
    EnumerationLimit { max_cosets: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("search cap exceeded: {0}")]
    SearchCap(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by a configured resource cap rather than bad
    /// input or a bug.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::EnumerationLimit { .. } | Error::SearchCap(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
