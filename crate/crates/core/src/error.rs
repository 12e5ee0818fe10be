use core::fmt;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero polynomial.
    ZeroDivisor,
    /// An operation that needs a nonzero polynomial received the zero polynomial.
    ZeroPolynomial,
    /// An operation that needs `deg p >= 1` received a constant.
    ConstantPolynomial,
    /// `gcd(0, 0)` is undefined.
    GcdOfZeros,
    /// Exact division left a nonzero remainder.
    NotDivisible,
    /// Interval endpoints are not ordered `a < b`.
    EmptyInterval,
    /// The given point or interval does not isolate a pole of the function.
    NotAPole,
    /// An interval endpoint coincides with a pole.
    EndpointAtPole,
    /// The Laguerre derivative with `sigma = 0` is not injective.
    NotUniquelyInvertible,
    /// The degree is too small for the requested operation.
    DegreeTooSmall { required: usize, found: usize },
    /// A hypothesis of the requested check does not hold.
    HypothesisViolated(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivisor => f.write_str("zero divisor"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::ConstantPolynomial => f.write_str("constant polynomial"),
            Error::GcdOfZeros => f.write_str("gcd of two zero polynomials"),
            Error::NotDivisible => f.write_str("division is not exact"),
            Error::EmptyInterval => f.write_str("interval endpoints must satisfy a < b"),
            Error::NotAPole => f.write_str("point is not a real pole of the function"),
            Error::EndpointAtPole => f.write_str("interval endpoint is a pole"),
            Error::NotUniquelyInvertible => f.write_str("not uniquely invertible for sigma = 0"),
            Error::DegreeTooSmall { required, found } => {
                write!(f, "degree {found} is below the required minimum {required}")
            }
            Error::HypothesisViolated(what) => write!(f, "hypothesis violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
