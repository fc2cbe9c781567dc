use core::fmt;

/// Errors reported by monoid construction and the factorization machinery.
///
/// Arithmetic is always checked: anything that would silently wrap instead
/// surfaces as [`Error::Overflow`]. Potentially unbounded searches are guarded
/// by explicit caps and report [`Error::SearchLimit`] when a cap is exceeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A presentation with no generators (or an empty matrix row set).
    EmptyPresentation,
    /// An affine generator equal to the zero vector, or a numerical generator 0.
    ZeroGenerator,
    /// A block-monoid order below 2.
    InvalidBlockOrder(u64),
    /// Group order above the configured resource cap.
    GroupTooLarge { order: u64, cap: u64 },
    /// Kernel matrix rows of unequal length.
    RaggedMatrix,
    /// Normalization produced no atoms (e.g. a kernel system with only the
    /// zero solution).
    TrivialMonoid,
    /// An element vector whose dimension does not match the monoid.
    DimensionMismatch { expected: usize, found: usize },
    /// An exponent vector whose arity does not match the atom count.
    ArityMismatch { expected: usize, found: usize },
    /// The zero element where a nonunit is required.
    ZeroElement,
    /// The element is not a member of the monoid.
    NotInMonoid,
    /// An operation restricted to numerical monoids (d = 1).
    NotNumerical,
    /// Numerical atoms with gcd ≠ 1 where a cofinite complement is required.
    GcdNotOne,
    /// A bounded search over an affine monoid was requested without a bound.
    MissingBound,
    /// Quasi-n-factoriality is defined only for n ≥ 2.
    InvalidQuasiLength(u64),
    /// A completion or sieve search exceeded its safety cap.
    SearchLimit { cap: u64 },
    /// Checked integer arithmetic overflowed.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyPresentation => write!(f, "presentation has no generators"),
            Error::ZeroGenerator => write!(f, "generators must be nonzero"),
            Error::InvalidBlockOrder(n) => write!(f, "block-monoid orders must be >= 2, got {n}"),
            Error::GroupTooLarge { order, cap } => {
                write!(f, "group order {order} exceeds the resource cap {cap}")
            }
            Error::RaggedMatrix => write!(f, "matrix rows must all have the same length"),
            Error::TrivialMonoid => write!(f, "normalization yields the trivial monoid"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "element dimension {found} does not match monoid dimension {expected}")
            }
            Error::ArityMismatch { expected, found } => {
                write!(f, "exponent vector arity {found} does not match atom count {expected}")
            }
            Error::ZeroElement => write!(f, "the zero element has no atomic factorization"),
            Error::NotInMonoid => write!(f, "element is not in the monoid"),
            Error::NotNumerical => write!(f, "operation requires a numerical monoid (dimension 1)"),
            Error::GcdNotOne => write!(f, "numerical atoms must have gcd 1 for this operation"),
            Error::MissingBound => {
                write!(f, "affine search requires an explicit max factorization length")
            }
            Error::InvalidQuasiLength(n) => {
                write!(f, "quasi-n-factoriality requires n >= 2, got {n}")
            }
            Error::SearchLimit { cap } => write!(f, "search exceeded its safety cap {cap}"),
            Error::Overflow => write!(f, "integer arithmetic overflowed"),
        }
    }
}

impl core::error::Error for Error {}
