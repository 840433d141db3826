//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown indecomposable `{0}`")]
    UnknownIndec(String),
    #[error("duplicate indecomposable `{0}`")]
    DuplicateIndec(String),
    #[error("indecomposable name must be nonempty")]
    EmptyIndecName,
    #[error("negative dimension in `{0}`")]
    NegativeDimension(String),
    #[error("matrix `{name}` must be {n}x{n}")]
    BadMatrixShape { name: &'static str, n: usize },
    #[error("hom_dim({0},{0}) must be at least 1")]
    MissingIdentity(String),
    #[error("shift is not a permutation of the indecomposables (near `{0}`)")]
    ShiftNotPermutation(String),
    #[error(
        "subcategory is not extension-closed (middle `{0}` has a conflation with both ends inside)"
    )]
    NotExtensionClosed(String),
    #[error("pairs are not comparable")]
    NotComparable,
    #[error("pair lies outside the interval")]
    OutsideInterval,
    #[error("no canonical conflation for `{0}`")]
    NoCanonicalConflation(String),
    #[error("ambiguous canonical conflation for `{0}`")]
    AmbiguousCanonicalConflation(String),
    #[error("conflation data incomplete: {0}")]
    ConflationDataIncomplete(String),
    #[error("invalid heart pair: {0}")]
    InvalidHeartPair(String),
    #[error("not an s-torsion pair of this category")]
    InvalidPair,
    #[error("category has no shift data")]
    NoShiftData,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("quiver has a directed cycle")]
    CyclicQuiver,
    #[error("vertex sets are not nested")]
    NotNested,
    #[error("subset is not successor-closed (an arrow leaves it at `{0}`)")]
    NotSuccessorClosed(String),
    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),
    #[error("too many {kind} for dense enumeration ({got} > {max})")]
    TooLarge {
        kind: &'static str,
        got: usize,
        max: usize,
    },
    #[error("invalid orientation string `{0}`")]
    BadOrientation(String),
    #[error("invalid negative-extension mode `{0}` (expected `zero` or `ext1`)")]
    BadMode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
