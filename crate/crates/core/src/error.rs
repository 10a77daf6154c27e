use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::IntPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the zero polynomial has no Galois group")]
    ZeroPolynomial,
    #[error("degree {0} is outside the supported range 1..=5")]
    DegreeOutOfRange(usize),
    #[error("expected a monic polynomial")]
    NotMonic,
    #[error("expected a quintic with zero x^4 coefficient")]
    NotDepressed,
    #[error("polynomial is reducible: {factor} is a factor")]
    Reducible { factor: IntPoly },
    #[error("discriminant is zero, so the polynomial is not squarefree")]
    NotSquarefree,
    #[error("integer square root of a negative number")]
    NegativeSqrt,
    #[error("root finding did not converge within {0} iterations")]
    ConvergenceFailure(usize),
    #[error("coefficients exceed double precision")]
    PrecisionExceeded,
    #[error("several root orderings give distinct θ values within tolerance of {target}")]
    AmbiguousOrdering { target: BigInt },
    #[error("no root ordering brings θ within tolerance of {target} (best mismatch {best:.3e})")]
    NoOrdering { target: BigInt, best: f64 },
    #[error("numeric ambiguity: {0}")]
    NumericAmbiguity(String),
    #[error("prime {0} divides the discriminant")]
    BadPrime(u64),
    #[error("trinomial fast path disagrees with the general path: {0}")]
    FastPathDisagreement(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures of the floating-point phase, where a tighter
    /// tolerance or a larger iteration budget may help.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::ConvergenceFailure(_)
                | Error::PrecisionExceeded
                | Error::AmbiguousOrdering { .. }
                | Error::NoOrdering { .. }
                | Error::NumericAmbiguity(_)
        )
    }
}
