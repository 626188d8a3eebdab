use thiserror::Error;

/// Broad classification of an [`Error`], used by the command line front end
/// to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: parse failures, dimension mismatches, bad arguments.
    Input,
    /// Well-formed input that violates an operation's precondition.
    Precondition,
    /// A post-condition or structural invariant failed to hold.
    Invariant,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("hyperplane normal is zero")]
    ZeroNormal,

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("event set is empty")]
    EmptyEventSet,

    #[error("events {0} and {1} are identical")]
    DuplicateEvent(usize, usize),

    #[error("events {0} and {1} are lightlike separated")]
    Lightlike(usize, usize),

    #[error("events {0} and {1} are not spacelike separated")]
    NotSpacelike(usize, usize),

    #[error("dilation factor must be positive, got {0}")]
    NonPositiveDilation(String),

    #[error("velocity is not slower than light: |v|^2 = {0}")]
    Superluminal(String),

    #[error("{k} events exceed the permutation cap of {cap}; use Monte Carlo sampling instead")]
    CapExceeded { k: usize, cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("the strict system is infeasible")]
    Infeasible,

    #[error("operation requires one space dimension, got {0}")]
    NotOneDimensional(usize),

    #[error("events {0} and {1} share a space coordinate")]
    RepeatedPosition(usize, usize),

    #[error("critical velocities v{0}{1} and v{2}{3} coincide")]
    CriticalVelocityTie(usize, usize, usize, usize),

    #[error("times of events {0} and {1} coincide")]
    RepeatedTime(usize, usize),

    #[error("at least {need} entries required, got {got}")]
    TooFew { need: usize, got: usize },

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("observation point is equidistant from points {0} and {1}")]
    Equidistant(usize, usize),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Parse { .. } | DimensionMismatch { .. } | ZeroDimension | EmptyEventSet
            | DuplicateEvent(..) | DuplicatePoint(..) | InvalidPermutation(_)
            | DivisionByZero | TooFew { .. } | ZeroNormal => ErrorKind::Input,
            Invariant(_) => ErrorKind::Invariant,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
