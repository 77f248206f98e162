use thiserror::Error;

use crate::report::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("wrong algebra kind: {0}")]
    KindMismatch(String),

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("{law} fails: {witness}")]
    LawViolation { law: String, witness: Box<Violation> },

    #[error("subspace is not closed under the product: b{0} * b{1} leaves it")]
    NotSubalgebra(usize, usize),

    #[error("not a Rota-Baxter operator: {0}")]
    NotRotaBaxter(Box<Violation>),

    #[error("subspaces do not form a direct vector-space sum")]
    NotDirectSum,

    #[error("unsupported weight {0}; this operation requires weight 1")]
    WrongWeight(String),

    #[error("tower level {level}: {reason}")]
    TowerFailure { level: usize, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("search budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("map is not a 1-cocycle: {0}")]
    NotCocycle(Box<Violation>),

    #[error("algebra has no two-sided unit")]
    NonUnital,

    #[error("structure is not induced by a Rota-Baxter operator: {0}")]
    NotRbDerived(Box<Violation>),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("unknown catalog name {0:?}")]
    UnknownName(String),

    #[error("{0} requires the d4 feature")]
    FeatureDisabled(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
