use thiserror::Error;

/// Every failure the library can report.
///
/// Indices in variants are basis indices or group element indices, as named.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionError { expected: usize, found: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("operation is not associative on ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("unknown group preset `{0}`")]
    UnknownPreset(String),

    #[error("grading violated by basis product ({0}, {1}) at coordinate {2}")]
    GradingViolation(usize, usize, usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("not graded: {0}")]
    NotGraded(String),
    #[error("subspace is not closed under multiplication: {0}")]
    ClosureViolation(String),

    #[error("D_{0} is not a two-sided ideal")]
    NotIdeal(usize),
    #[error("alpha_{0} is not multiplicative")]
    NotMultiplicative(usize),
    #[error("alpha_{0} is not a bijection D_(t^-1) -> D_t")]
    NotBijective(usize),
    #[error("alpha at the identity is not the identity of the whole algebra")]
    IdentityAxiomFailed,
    #[error("intersection axiom fails for (s, t) = ({0}, {1})")]
    IntersectionAxiomFailed(usize, usize),
    #[error("composition axiom fails for (s, t) = ({0}, {1})")]
    CompositionFailed(usize, usize),
    #[error("D_{0} is not idempotent")]
    DomainNotIdempotent(usize),
    #[error("D_{0} and D_{1} do not commute")]
    DomainsDontCommute(usize, usize),
    #[error("product axiom fails for (s, t) = ({0}, {1})")]
    ProductAxiomFailed(usize, usize),
    #[error("not an automorphism action: {0}")]
    NotAnAction(String),
    #[error("subspace is not an idempotent two-sided ideal")]
    NotIdempotentIdeal,
    #[error("A beta_{0}(A) differs from beta_{0}(A) A")]
    CommutationHypothesisFailed(usize),
    #[error("the translates of the ideal do not span the algebra")]
    NotMinimal,
    #[error("skew product is not associative on ({0}, {1}, {2})")]
    AssociativityFailed(usize, usize, usize),
    #[error("morphism is not equivariant at {0}")]
    NotEquivariant(usize),
    #[error("map is not multiplicative: {0}")]
    NotHomomorphism(String),

    #[error("balance violation in block triple {0}")]
    BalanceViolation(String),
    #[error("multiplier is not idempotent")]
    NotIdempotent,
    #[error("multiplier does not have degree 1")]
    NotDegreeOne,
    #[error("not a multiplier: {0}")]
    NotMultiplier(String),
    #[error("fullness fails: {0}")]
    FullnessFailed(String),
    #[error("middle algebras differ: {0}")]
    MiddleAlgebraMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("invalid object `{object}`: {detail}")]
    ValidationError { object: String, detail: String },
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
