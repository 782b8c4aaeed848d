//! Error type shared by the whole engine.
//!
//! Law failures discovered by a checker are *data* (see
//! [`crate::report::CheckReport`]); errors are reserved for structural
//! misuse, blown enumeration budgets, and constructions that refuse to
//! proceed (failed creation certificates, exhausted searches).

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CatError>;

#[derive(Debug, Clone, Error)]
pub enum CatError {
    /// Mismatched domains/codomains, wrong arity, an element outside its
    /// carrier: caller-side shape errors.
    #[error("structural error: {0}")]
    Structural(String),

    /// An enumeration would exceed the configured budget.
    #[error("enumeration refused: would require {required} items, budget is {budget}")]
    Budget { required: u128, budget: u64 },

    /// A coequalizer-creation certificate failed; the witness names the two
    /// inputs that break well-definedness of the induced structure map.
    #[error("creation certificate failed: {witness}")]
    CreationFailed { witness: String },

    /// The induced structure map on a quotient is inconsistent.
    #[error("inconsistent structure: {0}")]
    InconsistentStructure(String),

    /// A bounded brute-force search finished without a hit.
    #[error("bounded search exhausted: {0}")]
    SearchExhausted(String),

    /// A construction requiring an invertible unit map got a non-invertible
    /// one.
    #[error("normality error: {0}")]
    Normality(String),
}

impl CatError {
    pub fn structural(msg: impl Into<String>) -> Self {
        CatError::Structural(msg.into())
    }
}
