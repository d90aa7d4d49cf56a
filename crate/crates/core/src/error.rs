use thiserror::Error;

/// Errors from pair arithmetic, tree enumeration, and the gcd oracle.
///
/// All integer arithmetic in this crate is overflow-checked; a wraparound is
/// never silent. `Overflow` carries a short description of the computation
/// that failed, including the node or path where it happened.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    #[error("({m},{n}) violates m > n >= 1")]
    InvalidPair { m: i64, n: i64 },

    #[error("seed ({u},{v}) does not satisfy {m}*u + {n}*v = 1")]
    SeedMismatch { m: i64, n: i64, u: i64, v: i64 },

    /// The parent rule walked to a dead end: the pair shares a common factor
    /// and belongs to neither tree.
    #[error("({m},{n}) is not coprime and is reachable from neither root")]
    NotInForest { m: i64, n: i64 },

    #[error("extended_gcd requires a >= b >= 1, got ({a},{b})")]
    GcdDomain { a: i64, b: i64 },
}
