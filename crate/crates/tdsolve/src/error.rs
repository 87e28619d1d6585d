use thiserror::Error;

/// Errors produced by the solver library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameter tuple violates an invariant (t0 <= 0, w <= 0, non-finite).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// a = 0 requested in the TM or TQ picture, where the picture map is the
    /// identity and the regime machinery does not apply.
    #[error("a=0: transformation is the identity")]
    IdentityMap,

    /// Evaluation time outside the valid domain of the requested picture.
    #[error("time outside valid domain: {0}")]
    OutOfDomain(String),

    /// Special-function kernel rejected its input (argument <= 0, order out
    /// of the supported range, or a non-finite result such as Y near the
    /// origin overflowing).
    #[error("special function domain error: {0}")]
    SpecialFunction(String),
}
