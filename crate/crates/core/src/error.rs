//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable mismatch: `{0}` vs `{1}`")]
    VariableMismatch(String, String),

    #[error("substitution with nonzero constant term into a non-polynomial series")]
    SubstitutionConstantTerm,

    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),

    #[error("letter {0} out of range for genus {1}")]
    LetterOutOfRange(String, u32),

    #[error("{op}: term of degree {degree} not allowed")]
    DegreeNotAllowed { op: &'static str, degree: usize },

    #[error("derivation component of degree {0} is not cyclically invariant")]
    NotCyclicInvariant(usize),

    #[error("bracket result failed the cyclic-invariance check in degree {0}")]
    BracketInvariance(usize),

    #[error("Laurent index {0} out of range; only p in {{-2, -1, 0}} is theta-independent")]
    LaurentIndex(i32),

    #[error("expected a homogeneous derivation, found degrees {0:?}")]
    NotHomogeneous(Vec<usize>),

    #[error("trace verification requires m >= 3, got {0}")]
    TraceDegree(usize),

    #[error("invalid Gauss code: {0}")]
    InvalidGaussCode(String),

    #[error("arc index {0} out of range (code has {1} arcs)")]
    ArcOutOfRange(usize, usize),

    #[error("{{x_p}} and c are not a Z-basis (|det| = {0}); the specialization is not defined")]
    BasisCheckFailed(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
