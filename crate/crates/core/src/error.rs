use thiserror::Error;

use crate::finrel::Flavor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("flavor mismatch: expected {expected}, found {found}")]
    FlavorMismatch { expected: Flavor, found: Flavor },

    #[error("element {index} out of range for a carrier of size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("{flavor} objects cannot relate distinct elements {a} and {b}")]
    NotAllowedPair { flavor: Flavor, a: usize, b: usize },

    #[error("ordered set would identify distinct elements {a} and {b} (antisymmetry)")]
    Antisymmetry { a: usize, b: usize },

    #[error("assignment has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("map does not preserve the relation: {x} ~ {y} but {fx} !~ {fy}")]
    NotPreserving {
        x: usize,
        y: usize,
        fx: usize,
        fy: usize,
    },

    #[error("maps are not composable")]
    NotComposable,

    #[error("square does not commute")]
    NotCommuting,

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("invalid functor: {0}")]
    InvalidFunctor(String),

    #[error("invalid natural transformation: {0}")]
    InvalidTransformation(String),

    #[error("invalid cylinder: {0}")]
    InvalidCylinder(String),

    #[error("search cap of {cap} exceeded")]
    SearchCap { cap: u64 },

    #[error(
        "pushout presentation did not stabilize within path length {max_len} and {max_classes} classes"
    )]
    PushoutUnstable { max_len: usize, max_classes: usize },

    #[error("small object argument exceeded {max_steps} cells")]
    CellBound { max_steps: usize },

    #[error("object of size {size} exceeds the size guard {limit}")]
    SizeGuard { size: usize, limit: usize },

    #[error("no mediating map exists for the given cocone")]
    NoMediator,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Bound-exhaustion errors. These make a decision procedure
    /// undecided rather than wrong.
    pub fn is_bound(&self) -> bool {
        matches!(
            self,
            Error::SearchCap { .. }
                | Error::PushoutUnstable { .. }
                | Error::CellBound { .. }
                | Error::SizeGuard { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
