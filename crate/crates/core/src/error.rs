use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request that exceeds one of the hard size guards.
    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid element id {id} for group of order {order}")]
    InvalidElement { id: usize, order: usize },

    #[error("cannot parse element `{0}`")]
    ParseElement(String),

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    /// The search ran out of budget. Every k up to `last_verified_k` was
    /// scanned completely before the limit hit.
    #[error("budget exhausted ({reason}); last fully verified k = {last_verified_k:?}")]
    BudgetExhausted {
        reason: String,
        last_verified_k: Option<usize>,
    },

    /// A residue set that should be a coset (or coset minus one element)
    /// is not. Raised by the equality classifier.
    #[error("structural error: {0}")]
    Structural(String),

    /// An internal self-check failed; indicates a bug or a false conjecture.
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}
