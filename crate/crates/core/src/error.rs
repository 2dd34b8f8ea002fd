use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("face references unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("vertex `{0}` lies in no face")]
    IsolatedVertex(String),
    #[error("generators do not form an antichain: {0} is contained in {1}")]
    NotAntichain(String, String),
    #[error("empty generator in nonface family")]
    EmptyGenerator,
    #[error("singleton generator {{{0}}} would remove a required vertex")]
    SingletonGenerator(String),
    #[error("label sets of a join must be disjoint; `{0}` occurs in both")]
    LabelCollision(String),
    #[error("{what} exceeds limit {limit} (got {actual})")]
    Guard {
        what: &'static str,
        limit: u128,
        actual: u128,
    },
    #[error("inexact division, remainder {0}")]
    InexactDivision(String),
    #[error("{0} is not a minimal nonface")]
    NotMinimalNonface(String),
    #[error("minimal nonfaces are not pairwise disjoint: {0} meets {1}")]
    NotDisjoint(String, String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn guard(what: &'static str, limit: u128, actual: u128) -> Self {
        Error::Guard {
            what,
            limit,
            actual,
        }
    }

    /// Whether the error is a size/limit rejection rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

pub(crate) fn check_guard(what: &'static str, limit: u128, actual: u128) -> Result<()> {
    if actual > limit {
        Err(Error::guard(what, limit, actual))
    } else {
        Ok(())
    }
}
