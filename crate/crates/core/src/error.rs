use thiserror::Error;

/// Errors raised anywhere in the core library.
///
/// Points are reported 1-based, as they appear in cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation at byte {position}: {message}")]
    MalformedCycle { position: usize, message: String },

    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: images do not form a bijection")]
    NotABijection,

    #[error("enumeration bound of {bound} elements exceeded")]
    BoundExceeded { bound: usize },

    #[error("element {element} does not belong to {context}")]
    NotAMember { element: String, context: String },

    #[error("subset is not closed under conjugation: {a} acting on {b} leaves the set")]
    NotClosed { a: String, b: String },

    #[error("a quandle needs at least one element")]
    EmptyGround,

    #[error("degree {degree} is too small (need at least {minimum})")]
    DegreeTooSmall { degree: usize, minimum: usize },

    #[error("witness construction failed its postcondition for {element}: {detail}")]
    ConstructionPostconditionFailed { element: String, detail: String },

    #[error("equivalence violated: {detail}")]
    EquivalenceViolation { detail: String },

    #[error("precondition failed: {detail}")]
    PreconditionFailed { detail: String },

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),

    #[error("parameter out of range for {family}: {detail}")]
    ParameterOutOfRange { family: String, detail: String },

    #[error("group file line {line}: {message}")]
    GroupFile { line: usize, message: String },

    #[error("cannot parse element `{text}`: {message}")]
    ElementSyntax { text: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
