//! The better D = −15 family, whose rational π coefficient `a_n` has no
//! closed form and is recovered numerically.

use rug::ops::Pow;
use rug::{Float, Integer};

use super::{eval_identity, term_value, FamilyError, IdentityRecord, Suite, Term, TermKind};
use crate::coeffs::{bfg_integers, seq_value, SequenceId};
use crate::exact::{ipow, rat, BigInt, BigRat, RealSurd};
use crate::lambert::PrecisionCtx;

/// Lambert part of
/// `½r̃_n ζ(k) = a_n√15π^k + b(5^n S(48/5) + (−3)^n S(80/3)) + c₁S(15) + c₂S(60) + c₄S(240)`
/// with `k = 2n + 1`, `c₁ = 2^{2n}c₄ = f(g − b²)` and `2^{2n}c₂ = (bf − g)(bf + g)`.
fn lambert_part(n: u32) -> Vec<(BigRat, BigRat)> {
    let (f, g, b) = bfg_integers(n);
    let four_n = BigRat::from(ipow(4, n));
    let c1 = BigRat::from(Integer::from(&f * &(g.clone() - Integer::from(&b * &b))));
    let c4 = c1.clone() / &four_n;
    let bf = Integer::from(&b * &f);
    let c2 = BigRat::from((bf.clone() - &g) * (bf + &g)) / &four_n;
    let b = BigRat::from(b);
    vec![
        (rat(48, 5), b.clone() * BigRat::from(ipow(5, n))),
        (rat(80, 3), b * BigRat::from(ipow(-3, n))),
        (rat(15, 1), c1),
        (rat(60, 1), c2),
        (rat(240, 1), c4),
    ]
}

fn half_rt(n: u32) -> Result<BigRat, FamilyError> {
    Ok(BigRat::from(seq_value(SequenceId::RTilde, n)?) / 2u32)
}

/// The identity at index `n` with a given `a_n`.
pub fn gen15_record(n: u32, a_n: &BigRat) -> Result<IdentityRecord, FamilyError> {
    let k = 2 * n + 1;
    let mut terms = vec![
        Term {
            coeff: RealSurd::rational(-half_rt(n)?),
            kind: TermKind::ZetaTarget { k },
        },
        Term {
            coeff: RealSurd::pure(a_n.clone(), BigRat::from(15)),
            kind: TermKind::PiPower { k: k as i32 },
        },
    ];
    for (merit, c) in lambert_part(n) {
        terms.push(Term {
            coeff: RealSurd::rational(c),
            kind: TermKind::Lambert { k, merit },
        });
    }
    Ok(IdentityRecord {
        name: format!("gen15[n={n}]"),
        suite: Suite::Fractional,
        terms,
    })
}

/// The first continued-fraction convergent `p/q` of `x` with
/// `|x − p/q| < tol`, searching only `q ≤ max_den`.
pub fn rational_reconstruction(x: &Float, max_den: &BigInt, tol: &Float) -> Option<BigRat> {
    let exact = x.to_rational()?;
    let (mut h0, mut h1) = (Integer::from(0), Integer::from(1));
    let (mut k0, mut k1) = (Integer::from(1), Integer::from(0));
    let mut rest = exact;
    loop {
        let a = rest.clone().floor().numer().clone();
        let h2 = Integer::from(&a * &h1) + &h0;
        let k2 = Integer::from(&a * &k1) + &k0;
        if k2 > *max_den {
            return None;
        }
        let conv = BigRat::from((h2.clone(), k2.clone()));
        let err = Float::with_val(x.prec(), x - &conv).abs();
        if err < *tol {
            return Some(conv);
        }
        let frac = rest - BigRat::from(a);
        if frac == 0 {
            return None;
        }
        rest = frac.recip();
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
    }
}

/// `a_n` by isolating the π term numerically and reconstructing a rational
/// with denominator below `10^{digits/3}`; the result is re-checked at
/// twice the precision.
pub fn solve_pi_coeff(n: u32, ctx: &PrecisionCtx) -> Result<BigRat, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Coeff(crate::coeffs::CoeffError::ZeroIndex));
    }
    let prec = ctx.bits();
    let k = 2 * n + 1;
    let mut rest = term_value(&TermKind::ZetaTarget { k }, ctx)? * Float::with_val(prec, &half_rt(n)?);
    for (merit, c) in lambert_part(n) {
        rest -= term_value(&TermKind::Lambert { k, merit }, ctx)? * Float::with_val(prec, &c);
    }
    let scale = Float::with_val(prec, 15).sqrt() * term_value(&TermKind::PiPower { k: k as i32 }, ctx)?;
    let x = rest / scale;

    let bound_digits = ctx.digits / 3;
    let max_den = Integer::from(10).pow(bound_digits);
    let mag = Float::with_val(prec, x.abs_ref()).max(&Float::with_val(prec, 1));
    let tol = mag * Float::with_val(prec, 10).pow(-(ctx.digits as i32 - 10));
    let a_n = rational_reconstruction(&x, &max_den, &tol)
        .ok_or(FamilyError::Reconstruction { bound_digits })?;

    let check = PrecisionCtx::new(2 * ctx.digits)?;
    if !eval_identity(&gen15_record(n, &a_n)?, &check)?.passed {
        return Err(FamilyError::Reverify {
            value: a_n.to_string(),
            digits: check.digits,
        });
    }
    Ok(a_n)
}
