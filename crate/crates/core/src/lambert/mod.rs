//! Multiprecision polylogarithms, Lambert series and the functions built on
//! them, plus reference values of ζ and π that use none of that machinery.

mod complex;
mod modular;
mod reference;
mod series;

use rug::ops::Pow;
use rug::Float;
use thiserror::Error;

pub use complex::MpComplex;
pub use modular::{r_func, r_prime, t_func, u_func};
pub use reference::{pi_ref, ramanujan_4nm1, zeta_ref};
pub use series::{
    deriv_t_imag, lambert_S, lambert_eval, lambert_summands, li, li_real, nome, p_func, p_prime,
    sinh_sq_sum, sinh_sq_sum_complex, LambertEval,
};

pub type MpReal = Float;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LambertError {
    #[error("requested {0} digits; at least 10 are required")]
    TooFewDigits(u32),
    #[error("guard of {0} digits is below the minimum of 15")]
    GuardTooSmall(u32),
    #[error("polylogarithm argument has modulus {0} >= 1")]
    OutsideDisk(f64),
    #[error("merit must be positive, got {0}")]
    NonPositiveMerit(String),
    #[error("point is not in the upper half-plane (Im z = {0})")]
    NotUpperHalf(f64),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("argument must have positive real part")]
    NonPositiveArgument,
    #[error("order k = {0} is not supported here")]
    BadOrder(i64),
}

/// Requested decimal digits plus guard digits; every evaluation at one
/// context shares the derived binary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionCtx {
    pub digits: u32,
    pub guard: u32,
}

impl PrecisionCtx {
    /// Default guard: 15 digits plus `ceil(log10(N))`, with `N` the number of
    /// polylog summands in one merit-4 Lambert series at this precision.
    /// Each summand adds at most half an ulp of rounding.
    pub fn new(digits: u32) -> Result<Self, LambertError> {
        let d = f64::from(digits.max(10));
        let outer = (d * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI)).ceil();
        let terms = outer * (1.0 + outer.ln());
        let guard = 15 + terms.log10().ceil().max(0.0) as u32;
        Self::with_guard(digits, guard)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self, LambertError> {
        if digits < 10 {
            return Err(LambertError::TooFewDigits(digits));
        }
        if guard < 15 {
            return Err(LambertError::GuardTooSmall(guard));
        }
        Ok(PrecisionCtx { digits, guard })
    }

    /// Working mantissa bits.
    pub fn bits(&self) -> u32 {
        (f64::from(self.digits + self.guard) * std::f64::consts::LOG2_10).ceil() as u32 + 8
    }

    /// Natural log of the absolute error target `10^{−(digits + guard/2)}`.
    pub fn ln_eps(&self) -> f64 {
        -(f64::from(self.digits) + f64::from(self.guard) / 2.0) * std::f64::consts::LN_10
    }

    pub fn eps(&self) -> Float {
        let e = i32::try_from(self.digits + self.guard / 2).unwrap_or(i32::MAX);
        Float::with_val(self.bits(), 10).pow(-e)
    }
}

/// A point `z` with `Im z > 0`.
#[derive(Clone, Debug)]
pub struct UpperHalfPoint {
    z: MpComplex,
}

impl UpperHalfPoint {
    pub fn new(z: MpComplex) -> Result<Self, LambertError> {
        if z.im.is_sign_negative() || z.im.is_zero() {
            return Err(LambertError::NotUpperHalf(z.im.to_f64()));
        }
        Ok(UpperHalfPoint { z })
    }

    pub fn from_f64(re: f64, im: f64, ctx: &PrecisionCtx) -> Result<Self, LambertError> {
        Self::new(MpComplex::from_f64(re, im, ctx.bits()))
    }

    pub fn z(&self) -> &MpComplex {
        &self.z
    }

    pub fn into_inner(self) -> MpComplex {
        self.z
    }
}
