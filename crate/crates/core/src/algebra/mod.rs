//! Exact rational and polynomial arithmetic.

mod gcd;
mod poly;
mod sylvester;

pub use gcd::{gcd, resultant, squarefree_decompose, squarefree_part, SquareFree};
pub use poly::Poly;
pub use sylvester::{bareiss_determinant, discriminant_in_sigma, pencil_discriminant};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`; panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
