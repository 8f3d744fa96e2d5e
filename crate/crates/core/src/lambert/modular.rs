//! The correction term of the quasi-modular transformation and the
//! derivative combinations `T_k`, `U_k`.

use rug::ops::Pow;
use rug::Float;

use super::reference::{pi_ref, zeta_ref};
use super::series::{p_func, p_prime};
use super::{LambertError, MpComplex, PrecisionCtx, UpperHalfPoint};
use crate::exact::{bernoulli, factorial, BigRat};

fn check_odd(k: u32) -> Result<(), LambertError> {
    if k.is_multiple_of(2) {
        return Err(LambertError::BadOrder(i64::from(k)));
    }
    Ok(())
}

/// `c_m = B_{2m} B_{k+1−2m} / ((2m)! (k+1−2m)!)` for `m = 0..=(k+1)/2`.
fn bernoulli_pairs(k: u32) -> Vec<BigRat> {
    (0..=k.div_ceil(2))
        .map(|m| {
            let j = k + 1 - 2 * m;
            bernoulli(2 * m) * bernoulli(j) / BigRat::from(factorial(2 * m) * factorial(j))
        })
        .collect()
}

/// `(2πi)^k / 2`.
fn half_two_pi_i_pow(k: u32, ctx: &PrecisionCtx) -> MpComplex {
    let r = Float::with_val(ctx.bits(), pi_ref(ctx) * 2u32).pow(k) / 2u32;
    MpComplex::i_pow_times(i64::from(k), r)
}

fn at_prec(z: &MpComplex, ctx: &PrecisionCtx) -> MpComplex {
    let p = ctx.bits();
    MpComplex::new(Float::with_val(p, &z.re), Float::with_val(p, &z.im))
}

/// `R_k(z)` for odd `k`; at `k = 1` the logarithmic form with principal log.
pub fn r_func(k: u32, z: &MpComplex, ctx: &PrecisionCtx) -> Result<MpComplex, LambertError> {
    check_odd(k)?;
    if z.is_zero() {
        return Err(LambertError::ZeroArgument);
    }
    let p = ctx.bits();
    let z = at_prec(z, ctx);
    let zi = z.inv();
    if k == 1 {
        let half = Float::with_val(p, 0.5);
        let three = MpComplex::from_real(Float::with_val(p, 3));
        let inner = &(&z - &three) + &zi;
        let pi12 = pi_ref(ctx) / 12u32;
        return Ok(&z.ln().scale(&half) + &inner.scale(&pi12).mul_i());
    }
    let zeta = zeta_ref(k, ctx)?;
    let one = MpComplex::from_real(Float::with_val(p, 1));
    let zk1 = z.powi(i64::from(k - 1));
    let first = (&zk1 - &one).scale(&(zeta / 2u32));
    let z2 = &z * &z;
    let mut zp = zi;
    let mut poly = MpComplex::zero(p);
    for c in bernoulli_pairs(k) {
        if c != 0 {
            poly = &poly + &zp.scale(&Float::with_val(p, &c));
        }
        zp = &zp * &z2;
    }
    Ok(&first + &(&half_two_pi_i_pow(k, ctx) * &poly))
}

/// `R′_k(z)`, differentiating the closed form term by term.
pub fn r_prime(k: u32, z: &MpComplex, ctx: &PrecisionCtx) -> Result<MpComplex, LambertError> {
    check_odd(k)?;
    if z.is_zero() {
        return Err(LambertError::ZeroArgument);
    }
    let p = ctx.bits();
    let z = at_prec(z, ctx);
    let zi = z.inv();
    if k == 1 {
        let one = MpComplex::from_real(Float::with_val(p, 1));
        let pi12 = pi_ref(ctx) / 12u32;
        let log_part = zi.scale(&Float::with_val(p, 0.5));
        return Ok(&log_part + &(&one - &(&zi * &zi)).scale(&pi12).mul_i());
    }
    let zeta = zeta_ref(k, ctx)?;
    let first = z.powi(i64::from(k - 2)).scale(&(zeta * (k - 1) / 2u32));
    let z2 = &z * &z;
    let mut zp = &zi * &zi;
    let mut poly = MpComplex::zero(p);
    for (m, c) in bernoulli_pairs(k).into_iter().enumerate() {
        let w = 2 * m as i64 - 1;
        if c != 0 && w != 0 {
            let coef = Float::with_val(p, &c) * w;
            poly = &poly + &zp.scale(&coef);
        }
        zp = &zp * &z2;
    }
    Ok(&first + &(&half_two_pi_i_pow(k, ctx) * &poly))
}

/// `f − 2z f′/(k−1)`.
fn derivative_combination(k: u32, z: &MpComplex, f: MpComplex, fp: MpComplex) -> MpComplex {
    let p = f.prec();
    let w = Float::with_val(p, 2) / (k - 1);
    &f - &(z * &fp).scale(&w)
}

/// `T_k(z) = P_k(z) − 2zP′_k(z)/(k−1)` for odd `k ≥ 3`.
pub fn t_func(k: u32, z: &UpperHalfPoint, ctx: &PrecisionCtx) -> Result<MpComplex, LambertError> {
    check_odd(k)?;
    if k < 3 {
        return Err(LambertError::BadOrder(i64::from(k)));
    }
    let pv = p_func(k, z, ctx)?;
    let pp = p_prime(k, z, ctx)?;
    Ok(derivative_combination(k, &at_prec(z.z(), ctx), pv, pp))
}

/// `U_k(z) = R_k(z) − 2zR′_k(z)/(k−1)` for odd `k ≥ 3`.
pub fn u_func(k: u32, z: &MpComplex, ctx: &PrecisionCtx) -> Result<MpComplex, LambertError> {
    check_odd(k)?;
    if k < 3 {
        return Err(LambertError::BadOrder(i64::from(k)));
    }
    let rv = r_func(k, z, ctx)?;
    let rp = r_prime(k, z, ctx)?;
    Ok(derivative_combination(k, &at_prec(z, ctx), rv, rp))
}
