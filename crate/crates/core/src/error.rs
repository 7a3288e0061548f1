use alloc::string::String;

use crate::graph::Family;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown Coxeter family")]
    UnknownFamily,
    #[error("rank {rank} is out of range for family {family}")]
    RankOutOfRange { family: Family, rank: usize },
    #[error("not a valid Coxeter matrix")]
    InvalidMatrix,
    #[error("group order {order} exceeds the element limit {limit}")]
    OrderExceedsLimit { order: u128, limit: u128 },
    #[error("backend {0} is not available for this Coxeter type")]
    BackendUnavailable(&'static str),
    #[error("elements come from different backends")]
    BackendMismatch,
    #[error("element does not lie in the kernel of the projection")]
    NotInKernel,
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("maps have different source or target")]
    IncompatibleMaps,
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("catalog entry `{0}` is not defined for this type")]
    TypeMismatch(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("the given images do not define an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("probe set is not closed under conjugation by the image of generator {generator}")]
    ProbeNotClosed { generator: usize },
    #[error("lift word does not map onto the image of generator {generator}")]
    LiftMismatch { generator: usize },
    #[error("offset parity clash at probe reflection {probe}")]
    ParityClash { probe: usize },
    #[error("instance too large for brute force: {0}")]
    InstanceTooLarge(String),
}
