use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::Float;

use super::FamilyError;
use crate::coeffs::{family_coeffs, FamilyId};
use crate::exact::{rat, BigRat, RealSurd};
use crate::lambert::{lambert_S, pi_ref, ramanujan_4nm1, MpReal, PrecisionCtx};

/// ζ(k) from one integral family:
/// `pi_coeff·√s·π^k + Σ_d c_d·S_k(q_s^d)`.
pub fn zeta_via_family(fam: FamilyId, k: i64, ctx: &PrecisionCtx) -> Result<MpReal, FamilyError> {
    let fc = family_coeffs(fam, k)?;
    let s = fam.base();
    // terms of size M lose log10(M) digits to cancellation against ζ(k) ≈ 1
    let ln_pi = (k as f64) * std::f64::consts::PI.ln() + 0.5 * f64::from(s).ln();
    let mut log10_max = (fc.pi_coeff.to_f64().abs().ln() + ln_pi) / std::f64::consts::LN_10;
    for c in fc.lambert.values() {
        log10_max = log10_max.max(c.to_f64().abs().log10());
    }
    let extra = log10_max.max(0.0).ceil() as u32 + 2;
    let work = PrecisionCtx::with_guard(ctx.digits + extra, ctx.guard)?;
    let prec = work.bits();

    let root = Float::with_val(prec, s).sqrt();
    let pi_k = pi_ref(&work).pow(fc.k);
    let mut acc = Float::with_val(prec, &fc.pi_coeff) * root * pi_k;
    for (&d, c) in &fc.lambert {
        let merit = BigRat::from(fc.merit_of(d));
        acc += lambert_S(fc.k, &merit, &work)? * Float::with_val(prec, c);
    }
    Ok(Float::with_val(ctx.bits(), acc))
}

/// How to compute ζ(k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaMethod {
    Family(FamilyId),
    /// Ramanujan's merit-4 formula for `k ≡ 3 (mod 4)`.
    Ramanujan,
}

impl ZetaMethod {
    /// Family D for `k ≡ 1 (mod 4)`, Ramanujan for `k ≡ 3 (mod 4)`.
    pub fn auto(k: i64) -> Result<Self, FamilyError> {
        if k < 3 || k % 2 == 0 {
            return Err(FamilyError::BadK(k));
        }
        Ok(if k % 4 == 1 {
            ZetaMethod::Family(FamilyId::D)
        } else {
            ZetaMethod::Ramanujan
        })
    }

    pub fn supports(self, k: i64) -> bool {
        match self {
            ZetaMethod::Family(f) => f.index_for_k(k).is_ok(),
            ZetaMethod::Ramanujan => k >= 3 && k % 4 == 3,
        }
    }
}

impl fmt::Display for ZetaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaMethod::Family(fam) => write!(f, "{fam}"),
            ZetaMethod::Ramanujan => f.write_str("R"),
        }
    }
}

impl FromStr for ZetaMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "R" | "r" | "ramanujan" => Ok(ZetaMethod::Ramanujan),
            _ => s.parse::<FamilyId>().map(ZetaMethod::Family).map_err(|e| e.to_string()),
        }
    }
}

pub fn zeta_via(method: ZetaMethod, k: i64, ctx: &PrecisionCtx) -> Result<MpReal, FamilyError> {
    match method {
        ZetaMethod::Family(f) => zeta_via_family(f, k, ctx),
        ZetaMethod::Ramanujan => {
            if !method.supports(k) {
                return Err(FamilyError::BadK(k));
            }
            Ok(ramanujan_4nm1(((k + 1) / 4) as u32, ctx)?)
        }
    }
}

/// Relative cost `(2/√s)·Σ 1/d` as an exact surd and a decimal.
#[derive(Debug, Clone, PartialEq)]
pub struct CostModel {
    pub family: FamilyId,
    pub exact: RealSurd,
    pub value: f64,
}

pub fn cost_model(fam: FamilyId) -> CostModel {
    let s = i64::from(fam.base());
    let sum = fam
        .divisors()
        .iter()
        .fold(BigRat::new(), |acc, &d| acc + rat(1, i64::from(d)));
    let two_sum = sum * 2u32;
    // 2Σ/√s = (2Σ/s)·√s
    let exact = if s == 1 {
        RealSurd::rational(two_sum)
    } else {
        RealSurd::pure(two_sum / BigRat::from(s), BigRat::from(s))
    };
    let value = exact.to_float(64).to_f64();
    CostModel {
        family: fam,
        exact,
        value,
    }
}

/// The 20 merits above 4, fastest first.
pub fn merit_order() -> Vec<BigRat> {
    [
        (49, 3),
        (16, 1),
        (12, 1),
        (48, 5),
        (9, 1),
        (25, 3),
        (8, 1),
        (36, 5),
        (7, 1),
        (20, 3),
        (144, 23),
        (144, 25),
        (28, 5),
        (16, 3),
        (36, 7),
        (5, 1),
        (44, 9),
        (9, 2),
        (144, 35),
        (400, 99),
    ]
    .into_iter()
    .map(|(n, d)| rat(n, d))
    .collect()
}
