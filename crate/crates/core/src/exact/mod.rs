//! Exact arithmetic: big rationals, elements of imaginary quadratic fields,
//! real surds, and Bernoulli numbers.
//!
//! Everything here is exact. Floating point enters only in [`crate::lambert`].

mod bernoulli;
mod quad;
mod surd;

pub use bernoulli::{bernoulli, BernoulliCache};
pub use quad::{quad_im_coeff, quad_pow, QuadRat};
pub use surd::RealSurd;

use rug::Integer;

/// Exact rational in lowest terms with a positive denominator.
pub type BigRat = rug::Rational;

/// Arbitrary-precision integer.
pub type BigInt = Integer;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("operands live in different fields: sqrt(-{left}) vs sqrt(-{right})")]
    FieldMismatch { left: BigRat, right: BigRat },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field tag s must be a positive rational, got {0}")]
    BadFieldTag(BigRat),
}

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> BigInt {
    Integer::from(Integer::factorial(n))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n, k))
}

/// `base^exp` for a signed integer base, exact.
pub fn ipow(base: i64, exp: u32) -> BigInt {
    use rug::ops::Pow;
    Integer::from(base).pow(exp)
}

/// Shorthand for a small rational `num/den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::from((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(10), 3_628_800);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(40, 20), Integer::from(137_846_528_820u64));
    }

    #[test]
    fn rationals_are_canonical() {
        let r = rat(6, -4);
        assert_eq!(*r.numer(), -3);
        assert_eq!(*r.denom(), 2);
        assert_eq!(ipow(-4, 3), -64);
    }
}
