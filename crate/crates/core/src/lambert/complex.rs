use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Float;

/// Rectangular complex number over two MPFR floats of equal precision.
#[derive(Clone, PartialEq)]
pub struct MpComplex {
    pub re: Float,
    pub im: Float,
}

impl MpComplex {
    pub fn new(re: Float, im: Float) -> Self {
        MpComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        MpComplex::new(Float::new(prec), Float::new(prec))
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        MpComplex { re, im }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        MpComplex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn i(prec: u32) -> Self {
        MpComplex::new(Float::new(prec), Float::with_val(prec, 1))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        MpComplex::new(self.re.clone(), Float::with_val(self.prec(), -&self.im))
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.hypot_ref(&self.im))
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        MpComplex::new(Float::with_val(p, &self.re * k), Float::with_val(p, &self.im * k))
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        MpComplex::new(Float::with_val(self.prec(), -&self.im), self.re.clone())
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        let p = self.prec();
        MpComplex::new(
            Float::with_val(p, &self.re / &n),
            Float::with_val(p, -&self.im) / &n,
        )
    }

    pub fn div(&self, other: &Self) -> Self {
        self * &other.inv()
    }

    /// `exp(self)`.
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let r = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        MpComplex::new(Float::with_val(p, &r * &c), r * s)
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let p = self.prec();
        let m = self.abs().ln();
        let arg = Float::with_val(p, self.im.atan2_ref(&self.re));
        MpComplex::new(m, arg)
    }

    /// `self^n` by repeated squaring; negative `n` inverts first.
    pub fn powi(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.inv() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = MpComplex::from_real(Float::with_val(self.prec(), 1));
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `i^k` times the real `r`.
    pub fn i_pow_times(k: i64, r: Float) -> Self {
        let p = r.prec();
        let zero = Float::new(p);
        match k.rem_euclid(4) {
            0 => MpComplex::new(r, zero),
            1 => MpComplex::new(zero, r),
            2 => MpComplex::new(-r, zero),
            _ => MpComplex::new(zero, -r),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for MpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        write!(f, "({re:e} + {im:e}i)")
    }
}

impl Add<&MpComplex> for &MpComplex {
    type Output = MpComplex;
    fn add(self, rhs: &MpComplex) -> MpComplex {
        let p = self.prec();
        MpComplex::new(
            Float::with_val(p, &self.re + &rhs.re),
            Float::with_val(p, &self.im + &rhs.im),
        )
    }
}

impl Sub<&MpComplex> for &MpComplex {
    type Output = MpComplex;
    fn sub(self, rhs: &MpComplex) -> MpComplex {
        let p = self.prec();
        MpComplex::new(
            Float::with_val(p, &self.re - &rhs.re),
            Float::with_val(p, &self.im - &rhs.im),
        )
    }
}

impl Mul<&MpComplex> for &MpComplex {
    type Output = MpComplex;
    fn mul(self, rhs: &MpComplex) -> MpComplex {
        let p = self.prec();
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        MpComplex::new(ac - bd, ad + bc)
    }
}

impl Neg for &MpComplex {
    type Output = MpComplex;
    fn neg(self) -> MpComplex {
        let p = self.prec();
        MpComplex::new(Float::with_val(p, -&self.re), Float::with_val(p, -&self.im))
    }
}

impl Add for MpComplex {
    type Output = MpComplex;
    fn add(self, rhs: MpComplex) -> MpComplex {
        &self + &rhs
    }
}

impl Sub for MpComplex {
    type Output = MpComplex;
    fn sub(self, rhs: MpComplex) -> MpComplex {
        &self - &rhs
    }
}

impl Mul for MpComplex {
    type Output = MpComplex;
    fn mul(self, rhs: MpComplex) -> MpComplex {
        &self * &rhs
    }
}
