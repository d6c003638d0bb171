use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("not a bijection: {0}")]
    NotBijection(String),

    #[error("group is not transitive")]
    Intransitive,

    #[error("transformation is a permutation")]
    IsPermutation,

    #[error("{what} cap of {cap} exceeded")]
    CapExceeded { what: &'static str, cap: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("automaton is not synchronizing")]
    NotSynchronizing,

    #[error("no non-synchronizing partitions: m(G) and M(G) are undefined")]
    Undefined,

    #[error("unknown name `{0}`")]
    UnknownName(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, cap: impl TryInto<u64>) -> Self {
        Error::CapExceeded {
            what,
            cap: cap.try_into().unwrap_or(u64::MAX),
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
