use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a poset needs at least one element")]
    EmptyPoset,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("not a partial order: `{0}` and `{1}` lie on a cycle")]
    Cycle(String, String),
    #[error("map is not order-preserving: `{0}` <= `{1}` but their images are not ordered")]
    NotMonotone(String, String),
    #[error("map has {found} images but the source has {expected} elements")]
    MapArity { expected: usize, found: usize },
    #[error("image index {0} is not an element of the target")]
    ImageOutOfRange(usize),
    #[error("subset has universe {found}, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("subset must be connected")]
    DisconnectedSubset,
    #[error("the U- and F-families overlap, so the induced map on C(X) is undefined")]
    OverlappingFamilies,
    #[error("maps are not composable")]
    NotComposable,
    #[error("not a 2n-crown")]
    NotACrown,
    #[error("the criterion could not decide the fixed point property")]
    Inconclusive,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
