use thiserror::Error;

/// Errors produced by the exact-arithmetic operations in this crate.
///
/// Every operation either returns an exact answer or one of these; nothing
/// is ever approximated silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by an exactly-zero field element.
    #[error("division by zero")]
    DivisionByZero,

    /// Division by a sequence that vanishes on a whole residue class of
    /// indices, so no tail of the sequence avoids the zero.
    #[error("divisor sequence vanishes on a whole residue class")]
    EventuallyZeroDivisor,

    /// The residue classes of a sequence disagree, so the verdict would
    /// depend on which infinite index set a nonprincipal ultrafilter keeps.
    #[error("verdict depends on the choice of ultrafilter")]
    UltrafilterDependent,

    /// The element is infinite in magnitude; it has no standard part.
    #[error("element is not limited; no standard part exists")]
    NotLimited,

    /// The sequence contains a periodic selector, so it is not a single
    /// rational function of the index.
    #[error("sequence is not a rational function of the index")]
    NotRationalFunction,

    /// An interval argument with `lo >= hi`.
    #[error("interval is empty or degenerate")]
    DegenerateInterval,

    /// The polynomial has the same nonzero sign at both endpoints.
    #[error("no sign change on the interval")]
    NoSignChange,

    /// Square root of a negative rational.
    #[error("square root of a negative rational")]
    NegativeRadicand,

    /// No scheduled level admits a defined, sign-changing instantiation.
    #[error("instantiation undefined at every scheduled level")]
    UndefinedInstantiation,

    /// The interval does not isolate exactly one root of the polynomial.
    #[error("interval does not isolate exactly one root")]
    NotIsolating,

    /// An odd-degree operation applied to an even-degree polynomial.
    #[error("polynomial must have odd degree")]
    NotOddDegree,

    /// Root isolation applied to the zero polynomial.
    #[error("the zero polynomial vanishes everywhere")]
    ZeroPolynomial,

    /// Malformed input text.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
