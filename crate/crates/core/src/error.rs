use thiserror::Error;

/// Errors raised by field arithmetic, linear algebra and algebra computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("no element of multiplicative order {0} in {1}")]
    NoSuchOrder(u64, String),
    #[error("cannot parse scalar literal {literal:?} for {field}: {reason}")]
    BadLiteral {
        literal: String,
        field: String,
        reason: String,
    },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not associative: (e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("identity law fails at basis vector e{0}")]
    UnitLawViolated(usize),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("subspace is not nilpotent (power {0} is nonzero)")]
    NotNilpotent(usize),
    #[error("ideal closure did not converge within {0} steps")]
    ClosureDiverged(usize),
    #[error("radical unavailable: {0}")]
    RadicalUnavailable(String),
    #[error("radical hint rejected: {0}")]
    HintRejected(String),
    #[error("criterion disagreement for {property}: is_ideal={by_ideal}, annihilates K(A)={by_product}")]
    CriterionDisagreement {
        property: &'static str,
        by_ideal: bool,
        by_product: bool,
    },
    #[error("form is not symmetric: lambda(e{0}e{1}) != lambda(e{1}e{0})")]
    NotSymmetricForm(usize, usize),
    #[error("form is degenerate (Gram rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },
    #[error("element is not central")]
    CentralityViolated,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("quotient by the whole algebra")]
    ImproperIdeal,
    #[error("claimed basis rejected: {0}")]
    BasisClaimFailed(String),
    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),
    #[error("unknown case id {0:?}")]
    UnknownCase(String),
    #[error("cannot parse expression {expr:?}: {reason}")]
    BadExpression { expr: String, reason: String },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("dimension bound {requested} exceeds the limit {limit}")]
    DimensionBound { requested: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
