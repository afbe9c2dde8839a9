use alloc::string::String;

/// Errors raised at operation boundaries.
///
/// `Precondition` is reserved for mathematically meaningful rejections
/// (a hypothesis of a verifier does not hold); everything else signals
/// malformed input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero vector is not a projective point")]
    ZeroPoint,
    #[error("catalecticant level {level} out of range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("degenerate parametrization: {0}")]
    DegenerateParametrization(String),
    #[error("point is not in the span of the parametrized curve")]
    NotOnCurveSpan,
    #[error("dependent jet: embedded component of length {length} spans only {rank} dimensions")]
    DependentJet { length: usize, rank: usize },
    #[error("jet vector is inside the span of the support point")]
    SingularGerm,
    #[error("duplicate support point in scheme")]
    DuplicateSupport,
    #[error("union is not curvilinear at a shared support point")]
    UnrepresentableUnion,
    #[error("scheme is not reduced")]
    NonReduced,
    #[error("component of length {length} exceeds degree bound {bound}")]
    ComponentTooLong { length: usize, bound: usize },
    #[error("point is not in the span of the embedded scheme")]
    NotInSpan,
    #[error("points do not span a line")]
    DegenerateLine,
    #[error("root refinement failed at {bits} bits")]
    RootRefinement { bits: u32 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition failed [{name}]: {detail}")]
    Precondition { name: &'static str, detail: String },
}

impl Error {
    pub fn precondition(name: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            name,
            detail: detail.into(),
        }
    }

    /// True for rejections of mathematical hypotheses, as opposed to bad input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::Precondition { .. } | Error::NotInSpan | Error::ComponentTooLong { .. }
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
