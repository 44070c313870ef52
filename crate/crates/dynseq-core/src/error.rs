use thiserror::Error;

/// Errors shared across the crate. Exact arithmetic never loses precision,
/// so every failure is structural: mismatched contexts, division by zero,
/// indeterminacies along an orbit, or a blown size budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field descriptor mismatch: {lhs} vs {rhs}")]
    DescriptorMismatch { lhs: String, rhs: String },

    #[error("division by zero")]
    DivisionByZero,

    /// Extended Euclid against the minimal polynomial found a zero divisor,
    /// i.e. the declared minimal polynomial factors over Q.
    #[error("reducible minimal polynomial: {witness} is a zero divisor")]
    ReducibleMinimalPolynomial { witness: String },

    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("parse error at byte {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("variable table mismatch")]
    VarTableMismatch,

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("term count limit exceeded (limit {limit})")]
    SizeLimitExceeded { limit: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A composed denominator is identically zero: the composition is
    /// nowhere defined, not merely undefined at one point.
    #[error("composed denominator is identically zero (component {component})")]
    ZeroDenominatorSymbolic { component: usize },

    /// A rational map was evaluated where a component denominator vanishes.
    #[error("map undefined at evaluation point (component {component})")]
    Indeterminacy { component: usize },

    /// A sequence hit an indeterminacy while walking its orbit; `index` is
    /// the first term that could not be produced.
    #[error("sequence hits an indeterminacy at term {index}")]
    IndeterminacyAt { index: usize },

    #[error("polynomial is not integer-valued on the naturals")]
    NonIntegerValuedPolynomial,

    #[error("zero base raised to a negative exponent")]
    ZeroBaseNegativeExponent,

    #[error("invalid geometric data: {0}")]
    InvalidGeometricData(String),

    #[error("unknown catalog entry: {0}")]
    UnknownCatalogEntry(String),

    #[error("invalid document: {0}")]
    InvalidDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
