use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{BigRat, ExactError};

/// Element `re + im·√(−s)` of the imaginary quadratic field `Q(√(−s))`.
///
/// The tag `s` is any positive rational and is never reduced to square-free
/// form, so `Q(√(−5/3))` and `Q(√(−15))` are distinct tags even though they
/// are the same field. Arithmetic between different tags is rejected.
///
/// The `std::ops` impls panic on a tag mismatch; the `checked_*` methods
/// return [`ExactError::FieldMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadRat {
    re: BigRat,
    im: BigRat,
    s: BigRat,
}

impl QuadRat {
    pub fn new(re: BigRat, im: BigRat, s: BigRat) -> Result<Self, ExactError> {
        if s <= 0 {
            return Err(ExactError::BadFieldTag(s));
        }
        Ok(QuadRat { re, im, s })
    }

    /// Embeds a rational into `Q(√(−s))`.
    pub fn rational(re: BigRat, s: BigRat) -> Result<Self, ExactError> {
        Self::new(re, BigRat::new(), s)
    }

    pub fn one(s: &BigRat) -> Result<Self, ExactError> {
        Self::rational(BigRat::from(1), s.clone())
    }

    /// Small-integer convenience: `(a + b√(−s)) / den`.
    pub fn from_ints(a: i64, b: i64, den: i64, s: i64) -> Result<Self, ExactError> {
        if den == 0 {
            return Err(ExactError::DivisionByZero);
        }
        Self::new(
            BigRat::from((a, den)),
            BigRat::from((b, den)),
            BigRat::from(s),
        )
    }

    pub fn re(&self) -> &BigRat {
        &self.re
    }

    /// Rational coefficient of `√(−s)`; `Im(self) = im·√s`.
    pub fn im(&self) -> &BigRat {
        &self.im
    }

    pub fn s(&self) -> &BigRat {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn is_real(&self) -> bool {
        self.im == 0
    }

    pub fn conj(&self) -> Self {
        QuadRat {
            re: self.re.clone(),
            im: BigRat::from(-&self.im),
            s: self.s.clone(),
        }
    }

    /// Field norm `re² + s·im²`, which equals `self·conj(self)`.
    pub fn norm(&self) -> BigRat {
        let re2 = BigRat::from(self.re.square_ref());
        let im2 = BigRat::from(self.im.square_ref());
        re2 + im2 * &self.s
    }

    pub fn scale(&self, k: &BigRat) -> Self {
        QuadRat {
            re: BigRat::from(&self.re * k),
            im: BigRat::from(&self.im * k),
            s: self.s.clone(),
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), ExactError> {
        if self.s == other.s {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch {
                left: self.s.clone(),
                right: other.s.clone(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_field(other)?;
        Ok(QuadRat {
            re: BigRat::from(&self.re + &other.re),
            im: BigRat::from(&self.im + &other.im),
            s: self.s.clone(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_field(other)?;
        Ok(QuadRat {
            re: BigRat::from(&self.re - &other.re),
            im: BigRat::from(&self.im - &other.im),
            s: self.s.clone(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_field(other)?;
        // (a + b t)(c + d t) with t² = −s
        let ac = BigRat::from(&self.re * &other.re);
        let bd = BigRat::from(&self.im * &other.im);
        let ad = BigRat::from(&self.re * &other.im);
        let bc = BigRat::from(&self.im * &other.re);
        Ok(QuadRat {
            re: ac - bd * &self.s,
            im: ad + bc,
            s: self.s.clone(),
        })
    }

    /// `1/z = conj(z) / norm(z)`.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(QuadRat {
            re: c.re / &n,
            im: c.im / &n,
            s: c.s,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// `z^n` for any integer `n`, by binary powering. Negative `n` inverts
    /// first, so `z = 0` with `n < 0` is an error; `0^0 = 1`.
    pub fn pow(&self, n: i64) -> Result<Self, ExactError> {
        let mut base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = QuadRat::one(&self.s)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

/// Exact `z^n`.
pub fn quad_pow(z: &QuadRat, n: i64) -> Result<QuadRat, ExactError> {
    z.pow(n)
}

/// The rational `im` with `Im(z) = im·√s`.
pub fn quad_im_coeff(z: &QuadRat) -> BigRat {
    z.im.clone()
}

impl fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}·√-{})", self.re, self.im, self.s)
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&QuadRat> for &QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: &QuadRat) -> QuadRat {
                self.$checked(rhs).expect("QuadRat operands from different fields")
            }
        }
        impl $tr<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: QuadRat) -> QuadRat {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat {
            re: -self.re,
            im: -self.im,
            s: self.s,
        }
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, den: i64, s: i64) -> QuadRat {
        QuadRat::from_ints(a, b, den, s).unwrap()
    }

    #[test]
    fn square_of_half_one_plus_root_minus_seven() {
        let z = q(1, 1, 2, 7);
        assert_eq!(quad_pow(&z, 2).unwrap(), q(-3, 1, 2, 7));
        assert_eq!(quad_pow(&z, 0).unwrap(), q(1, 0, 1, 7));
        // a_1 = 2^3 - 2 Re(z^2) = 11
        let two_re = BigRat::from(2) * quad_pow(&z, 2).unwrap().re().clone();
        assert_eq!(BigRat::from(8) - two_re, 11);
    }

    #[test]
    fn negative_powers_use_the_conjugate() {
        let z = q(1, 1, 4, 7);
        let zi = z.pow(-1).unwrap();
        // |z|² = 1/2, so 1/z = 2·conj(z)
        assert_eq!(zi, q(1, -1, 2, 7));
        assert_eq!(&z * &zi, q(1, 0, 1, 7));
        assert_eq!(z.pow(-3).unwrap(), z.pow(3).unwrap().inv().unwrap());
    }

    #[test]
    fn im_coeff_examples() {
        assert_eq!(quad_im_coeff(&q(3, 0, 4, 7)), 0);
        assert_eq!(quad_im_coeff(&q(1, 1, 4, 7)), rat(1, 4));
        assert_eq!(quad_im_coeff(&q(-3, 1, 2, 7)), rat(1, 2));
    }

    #[test]
    fn zero_inverse_and_field_mismatch_are_errors() {
        let zero = q(0, 0, 1, 3);
        assert_eq!(zero.inv(), Err(ExactError::DivisionByZero));
        assert_eq!(zero.pow(-2), Err(ExactError::DivisionByZero));
        assert_eq!(zero.pow(0).unwrap(), q(1, 0, 1, 3));
        let err = q(1, 1, 1, 3).checked_mul(&q(1, 1, 1, 7)).unwrap_err();
        assert!(matches!(err, ExactError::FieldMismatch { .. }));
        assert!(QuadRat::new(rat(1, 1), rat(1, 1), rat(-1, 1)).is_err());
    }

    #[test]
    fn rational_tags_are_kept_verbatim() {
        let z = QuadRat::new(rat(1, 2), rat(1, 2), rat(5, 3)).unwrap();
        let w = &z * &z;
        // (1 + t)²/4 with t² = −5/3
        assert_eq!(*w.re(), rat(-1, 6));
        assert_eq!(*w.im(), rat(1, 2));
        assert_eq!(*w.s(), rat(5, 3));
    }

    fn small_quad() -> impl Strategy<Value = QuadRat> {
        (-20i64..20, -20i64..20, 1i64..9).prop_map(|(a, b, d)| q(a, b, d, 7))
    }

    proptest! {
        #[test]
        fn pow_matches_repeated_multiplication(z in small_quad(), n in 0i64..=12) {
            let mut acc = q(1, 0, 1, 7);
            for _ in 0..n {
                acc = &acc * &z;
            }
            prop_assert_eq!(z.pow(n).unwrap(), acc);
        }

        #[test]
        fn conjugation_is_multiplicative(z in small_quad(), w in small_quad()) {
            prop_assert_eq!((&z * &w).conj(), &z.conj() * &w.conj());
            let zz = &z * &z.conj();
            prop_assert!(zz.is_real());
            prop_assert_eq!(zz.re().clone(), z.norm());
            for part in [zz.re(), zz.im()] {
                let g = part.numer().clone().gcd(part.denom());
                prop_assert!(g == 1 || *part == 0);
            }
        }
    }
}
