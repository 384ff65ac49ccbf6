use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("square root of a non-positive rational {0}")]
    NegativeRadicand(String),
    #[error("squarefree extraction of {value} exceeded the trial-division bound {bound}")]
    FactorBoundExceeded { value: String, bound: u64 },
    #[error("radicand overflowed 64 bits")]
    RadicandOverflow,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inner product is not positive definite")]
    NotPositiveDefinite,
    #[error("inner product is not symmetric")]
    NotSymmetric,
    #[error("algebra is not graded")]
    NotGraded,
    #[error("subspace is not an ideal: [X{basis}, {ideal_vector}] escapes")]
    NotAnIdeal { basis: usize, ideal_vector: usize },
    #[error("ideal does not split as (i ∩ h) ⊕ (i ∩ h⊥)")]
    SplitConditionFails,
    #[error("restriction violated: {0}")]
    RestrictionViolated(String),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("adapted basis degenerate at index {0}")]
    AdaptedBasisDegenerate(usize),
    #[error("graded search over {n} basis vectors exceeds the cap {cap}")]
    SearchTooLarge { n: usize, cap: usize },
    #[error("entries must be pairwise distinct")]
    DuplicateEntries,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("polynomial constant term {0} is not the square of a positive rational")]
    NonSquareConstantTerm(String),
    #[error("polynomial degree {degree} exceeds truncation order {order}")]
    DegreeTooHigh { degree: usize, order: usize },
    #[error("magnitudes must be pairwise distinct positive rationals")]
    DuplicateMagnitudes,
    #[error("vector w = (T^(k-2) S)^t q vanished")]
    DegenerateW,
    #[error("certification failed at stage `{stage}`: {detail}")]
    CertificationFailed { stage: String, detail: String },
    #[error("k must be at least 3, got {0}")]
    BadK(usize),
    #[error("(a, b, c) = (0, 0, 0)")]
    ZeroCombination,
    #[error("pencil endpoints are proportional")]
    ProportionalCombinations,
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
