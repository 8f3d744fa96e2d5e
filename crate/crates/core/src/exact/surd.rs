use std::fmt;

use rug::Float;

use super::BigRat;

/// Exact real scalar `p + q·√s` with rational `p`, `q` and positive rational
/// radicand `s`. Used for identity coefficients such as `29√7/1980` or
/// `4(1 + √3)`. The radicand is carried symbolically and never simplified.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealSurd {
    pub rational: BigRat,
    pub surd: BigRat,
    pub radicand: BigRat,
}

impl RealSurd {
    pub fn new(rational: BigRat, surd: BigRat, radicand: BigRat) -> Self {
        debug_assert!(radicand > 0);
        RealSurd {
            rational,
            surd,
            radicand,
        }
    }

    pub fn rational(p: BigRat) -> Self {
        Self::new(p, BigRat::new(), BigRat::from(1))
    }

    /// `q·√s`.
    pub fn pure(q: BigRat, s: BigRat) -> Self {
        Self::new(BigRat::new(), q, s)
    }

    pub fn is_zero(&self) -> bool {
        self.rational == 0 && self.surd == 0
    }

    pub fn scale(&self, k: &BigRat) -> Self {
        RealSurd {
            rational: BigRat::from(&self.rational * k),
            surd: BigRat::from(&self.surd * k),
            radicand: self.radicand.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigRat::from(-1))
    }

    /// Numerical value at `prec` bits.
    pub fn to_float(&self, prec: u32) -> Float {
        let mut v = Float::with_val(prec, &self.rational);
        if self.surd != 0 {
            let root = Float::with_val(prec, &self.radicand).sqrt();
            v += root * &self.surd;
        }
        v
    }
}

impl fmt::Debug for RealSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational == 0, self.surd == 0) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}·√{}", self.surd, self.radicand),
            (false, false) => write!(f, "{} + {}·√{}", self.rational, self.surd, self.radicand),
        }
    }
}

impl fmt::Display for RealSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
