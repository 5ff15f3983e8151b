use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: expected one of {}", expected.join(", "))]
    Syntax {
        position: usize,
        expected: Vec<String>,
    },

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("degree {degree} exceeds the supported maximum of {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("objects belong to different groups")]
    GroupMismatch,

    #[error("topologies are not comparable: the finer kernel is not contained in the coarser one")]
    NotComparable,

    #[error("group has no spec to rebuild it from")]
    MissingSpec,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("group axiom violated: {0}")]
    AxiomViolation(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
